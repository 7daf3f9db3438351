// Copyright 2026 The qopmat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qopmat/io.hpp"

#include <fstream>
#include <sstream>

#include "qopmat/errors.hpp"

namespace qopmat {

namespace {

using nlohmann::json;

constexpr const char *kFormatTag = "qopmat-v1";

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

const json &field(const json &j, const char *name) {
  const auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t size_field(const json &j, const char *name) {
  const json &f = field(j, name);
  if (!f.is_number_integer() || f.get<std::int64_t>() <= 0)
    throw ParseError(std::string("field '") + name +
                     "' must be a positive integer");
  return f.get<std::size_t>();
}

} // namespace

json matrix_to_json(const ComplexMatrix &m) {
  json out = json::array();
  for (const cplx &z : m.entries())
    out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

ComplexMatrix matrix_from_json(const json &j, std::size_t rows,
                               std::size_t cols) {
  if (!j.is_array() || j.size() != rows * cols)
    throw ParseError("matrix: expected a row-major array of " +
                     std::to_string(rows * cols) + " [re, im] pairs");
  std::vector<cplx> entries;
  entries.reserve(j.size());
  for (const json &e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw ParseError("matrix: entries must be [re, im] number pairs");
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  ComplexMatrix m(rows, cols, std::move(entries));
  if (!m.all_finite())
    throw ParseError("matrix: non-finite entry");
  return m;
}

json basis_to_json(const OperatorBasis &b) {
  json out;
  out["d"] = b.d();
  out["kind"] = to_string(b.kind());
  json elems = json::array();
  for (const auto &e : b.elements())
    elems.push_back(matrix_to_json(e));
  out["elements"] = std::move(elems);
  return out;
}

OperatorBasis basis_from_json(const json &j) {
  const std::size_t d = size_field(j, "d");
  const BasisKind kind = [&] {
    const json &k = field(j, "kind");
    if (!k.is_string())
      throw ParseError("basis: 'kind' must be a string");
    return basis_kind_from_string(k.get<std::string>());
  }();

  const bool has_elements = j.contains("elements");
  if (kind == BasisKind::custom) {
    if (!has_elements)
      throw ParseError("basis: custom basis requires 'elements'");
  } else if (!has_elements) {
    switch (kind) {
    case BasisKind::transition:
      return OperatorBasis::transition(d);
    case BasisKind::weyl:
      return OperatorBasis::weyl(d);
    default:
      return OperatorBasis::gellmann(d);
    }
  }

  const json &elems = field(j, "elements");
  if (!elems.is_array() || elems.size() != d * d)
    throw ParseError("basis: expected d^2 elements");
  std::vector<ComplexMatrix> elements;
  elements.reserve(elems.size());
  for (const json &e : elems)
    elements.push_back(matrix_from_json(e, d, d));

  if (kind != BasisKind::custom) {
    // Canonical kinds are rebuilt exactly; the stored elements must agree.
    OperatorBasis canonical = kind == BasisKind::transition
                                  ? OperatorBasis::transition(d)
                              : kind == BasisKind::weyl
                                  ? OperatorBasis::weyl(d)
                                  : OperatorBasis::gellmann(d);
    for (std::size_t a = 0; a < canonical.size(); ++a)
      if (max_abs_diff(canonical.element(a), elements[a]) > 1e-9)
        throw ParseError("basis: elements do not match the declared kind '" +
                         to_string(kind) + "'");
    return canonical;
  }
  return OperatorBasis::custom(d, std::move(elements));
}

json channel_to_json(const Channel &c) {
  json out;
  out["format"] = kFormatTag;
  out["d"] = channel_d(c);
  out["n"] = channel_n(c);
  if (const auto *chi = std::get_if<ChiMatrix>(&c)) {
    out["repr"] = "chi";
    json basis = json::array();
    for (const auto &b : chi->basis)
      basis.push_back(basis_to_json(b));
    out["basis"] = std::move(basis);
    out["data"] = matrix_to_json(chi->data);
  } else if (const auto *s = std::get_if<SMatrix>(&c)) {
    out["repr"] = "smatrix";
    json basis = json::array();
    for (const auto &b : s->basis)
      basis.push_back(basis_to_json(b));
    out["basis"] = std::move(basis);
    out["data"] = matrix_to_json(s->data);
  } else {
    const auto &k = std::get<KrausChannel>(c);
    out["repr"] = "kraus";
    json ops = json::array();
    for (const auto &op : k.operators)
      ops.push_back(matrix_to_json(op));
    out["data"] = std::move(ops);
  }
  return out;
}

Channel channel_from_json(const json &j) {
  const json &format = field(j, "format");
  if (!format.is_string() || format.get<std::string>() != kFormatTag)
    throw ParseError("channel: unknown format tag (expected '" +
                     std::string(kFormatTag) + "')");
  const std::size_t d = size_field(j, "d");
  const std::size_t n = size_field(j, "n");
  const json &repr = field(j, "repr");
  if (!repr.is_string())
    throw ParseError("channel: 'repr' must be a string");
  const std::string kind = repr.get<std::string>();
  const std::size_t dim = ipow(d, 2 * n);

  try {
    if (kind == "kraus") {
      const json &data = field(j, "data");
      if (!data.is_array())
        throw ParseError("channel: kraus data must be an array of matrices");
      std::vector<ComplexMatrix> ops;
      ops.reserve(data.size());
      for (const json &m : data)
        ops.push_back(matrix_from_json(m, ipow(d, n), ipow(d, n)));
      return make_kraus(d, n, std::move(ops));
    }

    const json &basis_json = field(j, "basis");
    if (!basis_json.is_array() || basis_json.size() != n)
      throw ParseError("channel: expected one basis per qudit");
    std::vector<OperatorBasis> basis;
    basis.reserve(n);
    for (const json &b : basis_json) {
      basis.push_back(basis_from_json(b));
      if (basis.back().d() != d)
        throw ParseError("channel: basis dimension differs from channel d");
    }
    ComplexMatrix data = matrix_from_json(field(j, "data"), dim, dim);
    if (kind == "chi")
      return make_chi(std::move(basis), std::move(data));
    if (kind == "smatrix")
      return make_smatrix(std::move(basis), std::move(data));
    throw ParseError("channel: unknown repr '" + kind + "'");
  } catch (const DimensionError &e) {
    throw ParseError(std::string("channel: ") + e.what());
  }
}

json circuit_to_json(const CircuitSpec &c) {
  json out;
  out["d"] = c.d;
  out["wires"] = c.wires;
  json steps = json::array();
  for (const auto &s : c.steps)
    steps.push_back(json{{"channel", s.channel}, {"targets", s.targets}});
  out["steps"] = std::move(steps);
  return out;
}

CircuitSpec circuit_from_json(const json &j) {
  CircuitSpec spec;
  spec.d = size_field(j, "d");
  const json &wires = field(j, "wires");
  if (!wires.is_array() || wires.empty())
    throw ParseError("circuit: 'wires' must be a non-empty array of names");
  for (const json &w : wires) {
    if (!w.is_string())
      throw ParseError("circuit: wire names must be strings");
    spec.wires.push_back(w.get<std::string>());
  }
  const json &steps = field(j, "steps");
  if (!steps.is_array())
    throw ParseError("circuit: 'steps' must be an array");
  for (const json &s : steps) {
    CircuitStep step;
    const json &channel = field(s, "channel");
    if (!channel.is_string())
      throw ParseError("circuit: step 'channel' must be a string");
    step.channel = channel.get<std::string>();
    const json &targets = field(s, "targets");
    if (!targets.is_array() || targets.empty())
      throw ParseError("circuit: step 'targets' must be a non-empty array");
    for (const json &t : targets) {
      if (!t.is_string())
        throw ParseError("circuit: target wires must be strings");
      step.targets.push_back(t.get<std::string>());
    }
    spec.steps.push_back(std::move(step));
  }
  return spec;
}

json dataset_to_json(const TomographyDataset &ds) {
  json out;
  out["d"] = ds.d;
  out["n"] = ds.n;
  out["sigma"] = ds.noise_sigma;
  out["seed"] = ds.seed;
  out["values"] = ds.values;
  return out;
}

TomographyDataset dataset_from_json(const json &j) {
  TomographyDataset ds;
  ds.d = size_field(j, "d");
  ds.n = size_field(j, "n");
  const json &sigma = field(j, "sigma");
  if (!sigma.is_number())
    throw ParseError("dataset: 'sigma' must be a number");
  ds.noise_sigma = sigma.get<double>();
  const json &seed = field(j, "seed");
  if (seed.is_number_unsigned())
    ds.seed = seed.get<std::uint64_t>();
  else if (seed.is_number_integer() && seed.get<std::int64_t>() >= 0)
    ds.seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
  else
    throw ParseError("dataset: 'seed' must be a nonnegative integer");
  const json &values = field(j, "values");
  if (!values.is_array())
    throw ParseError("dataset: 'values' must be an array");
  ds.values.reserve(values.size());
  for (const json &v : values) {
    if (!v.is_number())
      throw ParseError("dataset: values must be real numbers");
    ds.values.push_back(v.get<double>());
  }
  return ds;
}

json report_to_json(const PhysicalityReport &r) {
  return json{{"hermiticity_deviation", r.hermiticity_deviation},
              {"min_chi_eigenvalue", r.min_chi_eigenvalue},
              {"trace_condition_excess", r.trace_condition_excess},
              {"is_cp", r.is_cp},
              {"is_trace_nonincreasing", r.is_trace_nonincreasing},
              {"is_trace_preserving", r.is_trace_preserving}};
}

std::string canonical_dump(const json &j) { return j.dump(2) + "\n"; }

json load_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void save_json(const std::string &path, const json &j) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  out << canonical_dump(j);
  if (!out)
    throw IoError("failed while writing '" + path + "'");
}

Channel load_channel(const std::string &path) {
  return channel_from_json(load_json(path));
}

void save_channel(const std::string &path, const Channel &c) {
  save_json(path, channel_to_json(c));
}

OperatorBasis load_basis(const std::string &path) {
  return basis_from_json(load_json(path));
}

void save_basis(const std::string &path, const OperatorBasis &b) {
  save_json(path, basis_to_json(b));
}

CircuitSpec load_circuit(const std::string &path) {
  return circuit_from_json(load_json(path));
}

TomographyDataset load_dataset(const std::string &path) {
  return dataset_from_json(load_json(path));
}

void save_dataset(const std::string &path, const TomographyDataset &ds) {
  save_json(path, dataset_to_json(ds));
}

} // namespace qopmat

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

#include "qopmat/composition.hpp"

#include <algorithm>
#include <set>

#include "qopmat/errors.hpp"

namespace qopmat {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

bool bases_match(const std::vector<OperatorBasis> &a,
                 const std::vector<OperatorBasis> &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!same_basis(a[k], b[k]))
      return false;
  return true;
}

ChiMatrix to_chi_in_basis(const Channel &c,
                          const std::vector<OperatorBasis> &basis) {
  if (const auto *k = std::get_if<KrausChannel>(&c))
    return chi_from_kraus(*k, basis);
  if (const auto *chi = std::get_if<ChiMatrix>(&c))
    return change_basis(*chi, basis);
  const auto &s = std::get<SMatrix>(c);
  std::vector<ConversionKit> kits;
  kits.reserve(s.basis.size());
  for (const auto &b : s.basis)
    kits.push_back(build_kit(b));
  return change_basis(s_to_chi_n(s, kits), basis);
}

} // namespace

SMatrix compose(const SMatrix &s1, const SMatrix &s2) {
  if (s1.d != s2.d || s1.n != s2.n)
    throw DimensionError("compose: channels disagree on d or n");
  if (!bases_match(s1.basis, s2.basis))
    throw DimensionError("compose: channels are in different bases");
  return SMatrix{s1.d, s1.n, s1.basis, matmul(s1.data, s2.data)};
}

ChiMatrix chi_tensor(const ChiMatrix &a, const ChiMatrix &b) {
  if (a.d != b.d)
    throw DimensionError("chi_tensor: factors disagree on d");
  const std::size_t block = b.data.rows();
  ComplexMatrix out(a.data.rows() * block, a.data.rows() * block);
  // out[(ra, rb), (ca, cb)] = a[ra, ca] * b[rb, cb]: the per-qudit basis
  // indices of the two factors concatenate on rows and columns alike.
  for (std::size_t ra = 0; ra < a.data.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.data.cols(); ++ca) {
      const cplx w = a.data(ra, ca);
      if (w == cplx(0.0, 0.0))
        continue;
      for (std::size_t rb = 0; rb < block; ++rb)
        for (std::size_t cb = 0; cb < block; ++cb)
          out(ra * block + rb, ca * block + cb) = w * b.data(rb, cb);
    }
  std::vector<OperatorBasis> basis = a.basis;
  basis.insert(basis.end(), b.basis.begin(), b.basis.end());
  return ChiMatrix{a.d, a.n + b.n, std::move(basis), std::move(out)};
}

SMatrix lift(const Channel &c, const std::vector<std::size_t> &targets,
             std::size_t n_register, const OperatorBasis &register_basis) {
  const std::size_t d = register_basis.d();
  if (channel_d(c) != d)
    throw DimensionError("lift: channel dimension differs from register");
  if (channel_n(c) != targets.size())
    throw DimensionError("lift: channel acts on " +
                         std::to_string(channel_n(c)) +
                         " qudits but got " + std::to_string(targets.size()) +
                         " targets");
  std::set<std::size_t> seen;
  for (std::size_t t : targets) {
    if (t >= n_register)
      throw DimensionError("lift: target wire out of range");
    if (!seen.insert(t).second)
      throw DimensionError("lift: duplicate target wire");
  }
  const std::size_t dim = ipow(d * d, n_register);
  if (dim > size_cap())
    throw ValidationError("lift: register matrix size " + std::to_string(dim) +
                          " exceeds the size cap");

  const std::vector<OperatorBasis> target_bases(targets.size(),
                                                register_basis);
  ChiMatrix chi = to_chi_in_basis(c, target_bases);

  // Untouched wires pick up the identity-operation chi.
  const ChiMatrix chi_id =
      chi_from_kraus(identity_channel(d), {register_basis});
  std::vector<std::size_t> slot_wire(targets.begin(), targets.end());
  for (std::size_t w = 0; w < n_register; ++w)
    if (!seen.count(w)) {
      chi = chi_tensor(chi, chi_id);
      slot_wire.push_back(w);
    }

  // Route qudit slots to their register wires: output factor w comes from
  // the slot currently holding wire w.
  std::vector<std::size_t> perm(n_register);
  for (std::size_t slot = 0; slot < n_register; ++slot)
    perm[slot_wire[slot]] = slot;
  const std::vector<std::size_t> dims(n_register, d * d);
  chi.data = tensor_permute(chi.data, dims, perm);
  chi.basis.assign(n_register, register_basis);

  const std::vector<ConversionKit> kits(n_register, build_kit(register_basis));
  return chi_to_s_n(chi, kits);
}

SMatrix run_circuit(const CircuitSpec &spec, const ChannelResolver &resolve,
                    const OperatorBasis &register_basis) {
  if (register_basis.d() != spec.d)
    throw DimensionError("run_circuit: register basis dimension mismatch");
  const std::size_t n = spec.wires.size();
  if (n == 0)
    throw ValidationError("run_circuit: register has no wires");

  SMatrix total{spec.d, n,
                std::vector<OperatorBasis>(n, register_basis),
                ComplexMatrix::identity(ipow(spec.d * spec.d, n))};

  for (const auto &step : spec.steps) {
    std::vector<std::size_t> targets;
    targets.reserve(step.targets.size());
    for (const auto &name : step.targets) {
      const auto it = std::find(spec.wires.begin(), spec.wires.end(), name);
      if (it == spec.wires.end())
        throw ValidationError("run_circuit: unknown wire '" + name + "'");
      targets.push_back(
          static_cast<std::size_t>(std::distance(spec.wires.begin(), it)));
    }
    const Channel channel = resolve(step.channel);
    total = compose(lift(channel, targets, n, register_basis), total);
  }
  return total;
}

} // namespace qopmat

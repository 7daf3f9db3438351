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

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qopmat/errors.hpp"
#include "qopmat/io.hpp"

namespace {

using namespace qopmat;

OperatorBasis make_canonical_basis(const std::string &kind, std::size_t d) {
  switch (basis_kind_from_string(kind)) {
  case BasisKind::transition:
    return OperatorBasis::transition(d);
  case BasisKind::weyl:
    return OperatorBasis::weyl(d);
  case BasisKind::gellmann:
    return OperatorBasis::gellmann(d);
  case BasisKind::custom:
    throw ValidationError("a custom basis must be given as a file path");
  }
  throw ValidationError("unknown basis kind: " + kind);
}

/// --basis accepts a canonical kind name or a path to a basis file.
OperatorBasis resolve_basis(const std::string &spec, std::size_t d) {
  if (spec == "transition" || spec == "weyl" || spec == "gellmann")
    return make_canonical_basis(spec, d);
  OperatorBasis b = load_basis(spec);
  if (b.d() != d)
    throw ValidationError("basis file '" + spec + "' has d = " +
                          std::to_string(b.d()) + ", channel has d = " +
                          std::to_string(d));
  return b;
}

std::vector<OperatorBasis> channel_bases(const Channel &c) {
  if (const auto *chi = std::get_if<ChiMatrix>(&c))
    return chi->basis;
  if (const auto *s = std::get_if<SMatrix>(&c))
    return s->basis;
  return std::vector<OperatorBasis>(channel_n(c),
                                    OperatorBasis::gellmann(channel_d(c)));
}

ChiMatrix to_chi(const Channel &c, const std::vector<OperatorBasis> &bases) {
  if (const auto *k = std::get_if<KrausChannel>(&c))
    return chi_from_kraus(*k, bases);
  if (const auto *chi = std::get_if<ChiMatrix>(&c))
    return change_basis(*chi, bases);
  const auto &s = std::get<SMatrix>(c);
  std::vector<ConversionKit> kits;
  for (const auto &b : s.basis)
    kits.push_back(build_kit(b));
  return change_basis(s_to_chi_n(s, kits), bases);
}

Channel convert_channel(const Channel &in, const std::string &to,
                        const std::vector<OperatorBasis> &bases) {
  const ChiMatrix chi = to_chi(in, bases);
  if (to == "chi")
    return chi;
  if (to == "smatrix") {
    std::vector<ConversionKit> kits;
    for (const auto &b : chi.basis)
      kits.push_back(build_kit(b));
    return chi_to_s_n(chi, kits);
  }
  if (to == "kraus")
    return kraus_from_chi(chi);
  throw ValidationError("unknown target representation '" + to + "'");
}

Channel builtin_channel(const std::string &name, std::size_t d) {
  const auto require_qubit = [&] {
    if (d != 2)
      throw ValidationError("built-in channel '" + name + "' requires d = 2");
  };
  if (name == "identity")
    return identity_channel(d);
  if (name == "depolarizing" || name == "depol")
    return depolarizing_channel(d);
  if (name == "x") {
    require_qubit();
    return unitary_channel(gates::pauli_x(), 2);
  }
  if (name == "y") {
    require_qubit();
    return unitary_channel(gates::pauli_y(), 2);
  }
  if (name == "z") {
    require_qubit();
    return unitary_channel(gates::pauli_z(), 2);
  }
  if (name == "h" || name == "hadamard") {
    require_qubit();
    return unitary_channel(gates::hadamard(), 2);
  }
  if (name == "s" || name == "phase") {
    require_qubit();
    return unitary_channel(gates::phase_s(), 2);
  }
  if (name == "cnot") {
    require_qubit();
    return unitary_channel(gates::cnot(), 2, 2);
  }
  if (name == "swap") {
    require_qubit();
    return unitary_channel(gates::swap2(), 2, 2);
  }
  throw ValidationError("unknown channel reference '" + name +
                        "' (not a file, not a built-in name)");
}

int run(int argc, char **argv) {
  CLI::App app{"chi/S-matrix representations of quantum operations on qudits"};
  app.require_subcommand(1);

  // basis ----------------------------------------------------------------
  auto *basis_cmd = app.add_subcommand("basis", "emit an operator basis file");
  std::size_t basis_d = 0;
  std::string basis_kind, basis_out;
  basis_cmd->add_option("--d", basis_d, "qudit dimension (>= 2)")->required();
  basis_cmd->add_option("--kind", basis_kind, "transition|weyl|gellmann")
      ->required();
  basis_cmd->add_option("--out", basis_out, "output file")->required();

  // convert / kraus --------------------------------------------------------
  auto *convert_cmd =
      app.add_subcommand("convert", "convert a channel between forms");
  std::string conv_in, conv_to, conv_basis, conv_out;
  convert_cmd->add_option("--in", conv_in, "input channel file")->required();
  convert_cmd->add_option("--to", conv_to, "chi|smatrix|kraus")->required();
  convert_cmd->add_option("--basis", conv_basis,
                          "target basis: kind name or basis file");
  convert_cmd->add_option("--out", conv_out, "output channel file")
      ->required();

  auto *kraus_cmd =
      app.add_subcommand("kraus", "extract the Kraus form of a channel");
  std::string kraus_in, kraus_out;
  kraus_cmd->add_option("--in", kraus_in, "input channel file")->required();
  kraus_cmd->add_option("--out", kraus_out, "output channel file")->required();

  // verify -----------------------------------------------------------------
  auto *verify_cmd =
      app.add_subcommand("verify", "physicality report for a channel");
  std::string verify_in;
  verify_cmd->add_option("--in", verify_in, "input channel file")->required();

  // compose ----------------------------------------------------------------
  auto *compose_cmd =
      app.add_subcommand("compose", "run a circuit file into one S-matrix");
  std::string compose_circuit, compose_out;
  compose_cmd->add_option("--circuit", compose_circuit, "circuit file")
      ->required();
  compose_cmd->add_option("--out", compose_out, "output channel file")
      ->required();

  // fidelity ---------------------------------------------------------------
  auto *fid_cmd =
      app.add_subcommand("fidelity", "process fidelity of a against ideal b");
  std::string fid_a, fid_b;
  fid_cmd->add_option("--a", fid_a, "channel under test")->required();
  fid_cmd->add_option("--b", fid_b, "rank-one ideal channel")->required();

  // tomo ---------------------------------------------------------------
  auto *tomo_cmd = app.add_subcommand(
      "tomo", "simulate or reconstruct entanglement-assisted tomography");
  std::string tomo_channel, tomo_reconstruct, tomo_out;
  double tomo_sigma = 0.0;
  std::uint64_t tomo_seed = 0;
  tomo_cmd->add_option("--channel", tomo_channel, "channel to measure");
  tomo_cmd->add_option("--sigma", tomo_sigma, "noise standard deviation");
  tomo_cmd->add_option("--seed", tomo_seed, "noise stream seed");
  tomo_cmd->add_option("--reconstruct", tomo_reconstruct,
                       "dataset file to reconstruct from");
  tomo_cmd->add_option("--out", tomo_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (basis_cmd->parsed()) {
    save_basis(basis_out, make_canonical_basis(basis_kind, basis_d));
    return 0;
  }

  if (convert_cmd->parsed() || kraus_cmd->parsed()) {
    const std::string in = convert_cmd->parsed() ? conv_in : kraus_in;
    const std::string to = convert_cmd->parsed() ? conv_to : "kraus";
    const std::string out = convert_cmd->parsed() ? conv_out : kraus_out;
    const Channel channel = load_channel(in);
    std::vector<OperatorBasis> bases = channel_bases(channel);
    if (convert_cmd->parsed() && !conv_basis.empty())
      bases.assign(channel_n(channel),
                   resolve_basis(conv_basis, channel_d(channel)));
    save_channel(out, convert_channel(channel, to, bases));
    return 0;
  }

  if (verify_cmd->parsed()) {
    const Channel channel = load_channel(verify_in);
    std::cout << canonical_dump(report_to_json(check_physical(channel)));
    return 0;
  }

  if (compose_cmd->parsed()) {
    const CircuitSpec spec = load_circuit(compose_circuit);
    const OperatorBasis reg = OperatorBasis::gellmann(spec.d);
    const auto resolve = [&](const std::string &ref) -> Channel {
      if (std::filesystem::exists(ref))
        return load_channel(ref);
      return builtin_channel(ref, spec.d);
    };
    save_channel(compose_out, run_circuit(spec, resolve, reg));
    return 0;
  }

  if (fid_cmd->parsed()) {
    const Channel a = load_channel(fid_a);
    const Channel b = load_channel(fid_b);
    const ChiMatrix chi_a = to_chi(a, channel_bases(a));
    const ChiMatrix chi_b = to_chi(b, channel_bases(b));
    std::cout << nlohmann::json(process_fidelity(chi_a, chi_b)).dump() << "\n";
    return 0;
  }

  if (tomo_cmd->parsed()) {
    if (!tomo_reconstruct.empty()) {
      const TomographyResult res = reconstruct(load_dataset(tomo_reconstruct));
      if (!tomo_out.empty())
        save_channel(tomo_out, res.chi);
      std::cout << canonical_dump(report_to_json(res.report));
      return 0;
    }
    if (tomo_channel.empty())
      throw ValidationError("tomo: --channel or --reconstruct is required");
    if (tomo_out.empty())
      throw ValidationError("tomo: --out is required when simulating");
    const Channel channel = load_channel(tomo_channel);
    save_dataset(tomo_out, simulate_dataset(channel, tomo_sigma, tomo_seed));
    return 0;
  }

  return 1;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const qopmat::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qopmat::IoError &e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const qopmat::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

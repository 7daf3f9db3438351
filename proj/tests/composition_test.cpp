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

#include <map>

#include <doctest.h>

#include "qopmat/composition.hpp"
#include "qopmat/errors.hpp"
#include "test_support.hpp"

using namespace qopmat;
using namespace qopmat::testing;

namespace {

const OperatorBasis &gm2() {
  static const OperatorBasis b = OperatorBasis::gellmann(2);
  return b;
}

SMatrix to_s(const KrausChannel &k) {
  const std::vector<OperatorBasis> bases(k.n, gm2());
  const std::vector<ConversionKit> kits(k.n, build_kit(gm2()));
  return chi_to_s_n(chi_from_kraus(k, bases), kits);
}

/// |b1 b0><b1 b0| two-qubit computational density matrix.
ComplexMatrix basis_state(std::size_t index) {
  ComplexMatrix rho(4, 4);
  rho(index, index) = 1.0;
  return rho;
}

} // namespace

TEST_CASE("compose: identity absorbs, depolarizing is idempotent") {
  const SMatrix id = to_s(identity_channel(2));
  const SMatrix x = to_s(unitary_channel(gates::pauli_x(), 2));
  CHECK(max_abs_diff(compose(id, x).data, x.data) < 1e-14);

  const SMatrix dep = to_s(depolarizing_channel(2));
  ComplexMatrix want(4, 4);
  want(0, 0) = 1.0;
  CHECK(max_abs_diff(dep.data, want) < 1e-13);
  CHECK(max_abs_diff(compose(dep, dep).data, dep.data) < 1e-13);
}

TEST_CASE("compose matches sequential channel action") {
  auto rng = make_rng(61);
  for (int rep = 0; rep < 5; ++rep) {
    const KrausChannel k1 = random_cp_channel(2, 1, 2, rng);
    const KrausChannel k2 = random_cp_channel(2, 1, 2, rng);
    const SMatrix combined = compose(to_s(k1), to_s(k2));
    for (int s = 0; s < 4; ++s) {
      const ComplexMatrix rho = random_density(2, rng);
      const ComplexMatrix direct = apply_kraus(k1, apply_kraus(k2, rho));
      CHECK(max_abs_diff(apply_channel(Channel{combined}, rho), direct) <
            1e-12);
    }
  }
}

TEST_CASE("compose: mismatched operands rejected, associativity holds") {
  const SMatrix a = to_s(identity_channel(2));
  SMatrix wrong = a;
  wrong.basis = {OperatorBasis::transition(2)};
  CHECK_THROWS_AS(compose(a, wrong), DimensionError);

  auto rng = make_rng(62);
  const SMatrix s1 = to_s(random_cp_channel(2, 1, 2, rng));
  const SMatrix s2 = to_s(random_cp_channel(2, 1, 2, rng));
  const SMatrix s3 = to_s(random_cp_channel(2, 1, 2, rng));
  CHECK(max_abs_diff(compose(compose(s1, s2), s3).data,
                     compose(s1, compose(s2, s3)).data) < 1e-12);
}

TEST_CASE("lift: identity stays identity; X on wire 1 flips |00> to |01>") {
  const SMatrix lifted_id =
      lift(Channel{identity_channel(2)}, {0}, 2, gm2());
  CHECK(max_abs_diff(lifted_id.data, ComplexMatrix::identity(16)) < 1e-12);

  const SMatrix lifted_x =
      lift(Channel{unitary_channel(gates::pauli_x(), 2)}, {1}, 2, gm2());
  const ComplexMatrix out =
      apply_channel(Channel{lifted_x}, basis_state(0b00));
  CHECK(max_abs_diff(out, basis_state(0b01)) < 1e-12);
}

TEST_CASE("lift: reversed CNOT targets equal the wire-swapped lift") {
  const Channel cnot{unitary_channel(gates::cnot(), 2, 2)};
  const SMatrix fwd = lift(cnot, {0, 1}, 2, gm2());
  const SMatrix rev = lift(cnot, {1, 0}, 2, gm2());
  const ComplexMatrix swapped = tensor_permute(fwd.data, {4, 4}, {1, 0});
  CHECK(max_abs_diff(rev.data, swapped) < 1e-12);

  // Also check the action: control on wire 1 flips wire 0 when wire 1 is 1.
  const ComplexMatrix out = apply_channel(Channel{rev}, basis_state(0b01));
  CHECK(max_abs_diff(out, basis_state(0b11)) < 1e-12);
}

TEST_CASE("lift accepts any representation of the step channel") {
  const KrausChannel xk = unitary_channel(gates::pauli_x(), 2);
  const ChiMatrix xchi = chi_from_kraus(xk, {OperatorBasis::transition(2)});
  const SMatrix xs = chi_to_s(xchi, build_kit(OperatorBasis::transition(2)));

  const SMatrix from_kraus = lift(Channel{xk}, {1}, 2, gm2());
  const SMatrix from_chi = lift(Channel{xchi}, {1}, 2, gm2());
  const SMatrix from_s = lift(Channel{xs}, {1}, 2, gm2());
  CHECK(max_abs_diff(from_kraus.data, from_chi.data) < 1e-12);
  CHECK(max_abs_diff(from_kraus.data, from_s.data) < 1e-12);
}

TEST_CASE("lift: disjoint targets commute") {
  auto rng = make_rng(63);
  const Channel a{random_cp_channel(2, 1, 2, rng)};
  const Channel b{random_cp_channel(2, 1, 2, rng)};
  const SMatrix la = lift(a, {0}, 2, gm2());
  const SMatrix lb = lift(b, {1}, 2, gm2());
  CHECK(max_abs_diff(compose(la, lb).data, compose(lb, la).data) < 1e-12);
}

TEST_CASE("lift: guards") {
  CHECK_THROWS_AS(lift(Channel{identity_channel(2)}, {2}, 2, gm2()),
                  DimensionError);
  CHECK_THROWS_AS(
      lift(Channel{identity_channel(2, 2)}, {0, 0}, 2, gm2()),
      DimensionError);
  CHECK_THROWS_AS(lift(Channel{identity_channel(2)}, {0}, 7, gm2()),
                  ValidationError); // 4^7 exceeds the default cap
}

TEST_CASE("run_circuit: empty circuit and involutive X pair") {
  CircuitSpec spec;
  spec.d = 2;
  spec.wires = {"q0", "q1"};
  const auto resolve = [](const std::string &name) -> Channel {
    if (name == "x")
      return unitary_channel(gates::pauli_x(), 2);
    throw ValidationError("unknown channel " + name);
  };

  const SMatrix empty = run_circuit(spec, resolve, gm2());
  CHECK(max_abs_diff(empty.data, ComplexMatrix::identity(16)) == 0.0);

  spec.steps = {{"x", {"q0"}}, {"x", {"q0"}}};
  const SMatrix twice = run_circuit(spec, resolve, gm2());
  CHECK(max_abs_diff(twice.data, ComplexMatrix::identity(16)) < 1e-12);

  spec.steps = {{"x", {"qq"}}};
  CHECK_THROWS_AS(run_circuit(spec, resolve, gm2()), ValidationError);
}

TEST_CASE("run_circuit: H then CNOT prepares the Bell state") {
  CircuitSpec spec;
  spec.d = 2;
  spec.wires = {"q0", "q1"};
  spec.steps = {{"h", {"q0"}}, {"cnot", {"q0", "q1"}}};
  const auto resolve = [](const std::string &name) -> Channel {
    if (name == "h")
      return unitary_channel(gates::hadamard(), 2);
    if (name == "cnot")
      return unitary_channel(gates::cnot(), 2, 2);
    throw ValidationError("unknown channel " + name);
  };

  const SMatrix s = run_circuit(spec, resolve, gm2());
  const ComplexMatrix out = apply_channel(Channel{s}, basis_state(0b00));

  // State-vector oracle: |00> -> (|00> + |10>)/sqrt(2) -> (|00> + |11>)/
  // sqrt(2); frozen density matrix.
  ComplexMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(max_abs_diff(out, bell) < 1e-12);

  // Unitary-only circuit: rank-one chi with trace d^n.
  const std::vector<ConversionKit> kits(2, build_kit(gm2()));
  const ChiMatrix chi = s_to_chi_n(s, kits);
  const auto eig = eigh(chi.data).eigenvalues;
  CHECK(eig[0] == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(std::abs(eig[1]) < 1e-10);
}

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

#include <doctest.h>

#include "qopmat/basis.hpp"
#include "qopmat/errors.hpp"
#include "qopmat/liouville.hpp"
#include "test_support.hpp"

using namespace qopmat;
using namespace qopmat::testing;

namespace {

OperatorBasis canonical(BasisKind kind, std::size_t d) {
  switch (kind) {
  case BasisKind::transition:
    return OperatorBasis::transition(d);
  case BasisKind::weyl:
    return OperatorBasis::weyl(d);
  default:
    return OperatorBasis::gellmann(d);
  }
}

const BasisKind kCanonicalKinds[] = {BasisKind::transition, BasisKind::weyl,
                                     BasisKind::gellmann};

/// Exhaustive four-index completeness sum, written out independently of
/// validate_basis.
double completeness_deviation_oracle(const OperatorBasis &b) {
  const std::size_t d = b.d();
  double dev = 0.0;
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k) {
          cplx acc(0.0, 0.0);
          for (std::size_t a = 0; a < b.size(); ++a)
            acc += std::conj(b.element(a)(m, n)) * b.element(a)(l, k);
          const cplx want = (n == k && m == l) ? cplx(1.0) : cplx(0.0);
          dev = std::max(dev, std::abs(acc - want));
        }
  return dev;
}

} // namespace

TEST_CASE("transition basis: explicit d = 2 elements and exact identities") {
  const OperatorBasis pi = OperatorBasis::transition(2);
  REQUIRE(pi.size() == 4);
  CHECK(max_abs_diff(pi.element(0), ComplexMatrix{{1, 0}, {0, 0}}) == 0.0);
  CHECK(max_abs_diff(pi.element(1), ComplexMatrix{{0, 1}, {0, 0}}) == 0.0);
  CHECK(max_abs_diff(pi.element(2), ComplexMatrix{{0, 0}, {1, 0}}) == 0.0);
  CHECK(max_abs_diff(pi.element(3), ComplexMatrix{{0, 0}, {0, 1}}) == 0.0);

  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      CHECK(hs_inner(pi.element(a), pi.element(b)) ==
            ((a == b) ? cplx(1.0) : cplx(0.0)));
  CHECK(completeness_deviation_oracle(pi) == 0.0);
}

TEST_CASE("weyl basis: phase convention and scaled unitarity") {
  const OperatorBasis w2 = OperatorBasis::weyl(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(w2.element(0), ComplexMatrix{{s, 0}, {0, s}}) < 1e-15);

  for (std::size_t d : {2, 3, 5}) {
    const OperatorBasis w = OperatorBasis::weyl(d);
    const ComplexMatrix want =
        (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
    for (const auto &e : w.elements())
      CHECK(max_abs_diff(matmul(dagger(e), e), want) < 1e-14);
  }
}

TEST_CASE("weyl supervectors are maximally entangled") {
  for (std::size_t d : {2, 3}) {
    const OperatorBasis w = OperatorBasis::weyl(d);
    const ComplexMatrix want =
        (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
    for (const auto &e : w.elements()) {
      const ComplexMatrix reduced =
          partial_trace(oracle_dyadic(e, e), {d, d}, {1});
      CHECK(max_abs_diff(reduced, want) < 1e-14);
    }
  }
}

TEST_CASE("gellmann basis: d = 2 elements follow the stated convention") {
  const OperatorBasis gm = OperatorBasis::gellmann(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(gm.element(0), ComplexMatrix{{s, 0}, {0, s}}) < 1e-15);
  CHECK(max_abs_diff(gm.element(1), ComplexMatrix{{0, s}, {s, 0}}) < 1e-15);
  // v_{0,1} = i(pi_01 - pi_10)/sqrt(2), leading imaginary factor verbatim.
  CHECK(max_abs_diff(gm.element(2), ComplexMatrix{{0, cplx(0, s)},
                                                  {cplx(0, -s), 0}}) < 1e-15);
  // w_1 = (-pi_00 + pi_11)/sqrt(2).
  CHECK(max_abs_diff(gm.element(3), ComplexMatrix{{-s, 0}, {0, s}}) < 1e-15);
}

TEST_CASE("gellmann basis: Hermitian, traceless except index 0") {
  for (std::size_t d : {2, 3, 4, 5}) {
    const OperatorBasis gm = OperatorBasis::gellmann(d);
    REQUIRE(gm.size() == d * d);
    for (const auto &e : gm.elements())
      CHECK(hermiticity_deviation(e) == 0.0);
    CHECK(std::abs(trace(gm.element(0)) -
                   cplx(std::sqrt(static_cast<double>(d)))) < 1e-14);
    for (std::size_t a = 1; a < gm.size(); ++a)
      CHECK(std::abs(trace(gm.element(a))) < 1e-15);
  }
}

TEST_CASE("validate_basis: canonical bases pass for d in 2..5") {
  for (std::size_t d : {2, 3, 4, 5})
    for (BasisKind kind : kCanonicalKinds) {
      const BasisReport r = validate_basis(canonical(kind, d));
      CHECK(r.passed);
      CHECK(r.orthonormality_deviation < 1e-10);
      CHECK(r.completeness_deviation < 1e-10);
      CHECK(r.reconstruction_deviation < 1e-10);
      CHECK(r.depolarizing_deviation < 1e-10);
    }
}

TEST_CASE("validate_elements: a rescaled element breaks orthonormality") {
  std::vector<ComplexMatrix> elems = OperatorBasis::transition(2).elements();
  elems[1] = 1.01 * elems[1];
  const BasisReport r = validate_elements(2, elems);
  CHECK_FALSE(r.passed);
  // |1.01^2 - 1| on the rescaled diagonal entry of the Gram matrix.
  CHECK(r.orthonormality_deviation ==
        doctest::Approx(0.0201).epsilon(1e-10));
  CHECK_THROWS_AS(OperatorBasis::custom(2, elems), ValidationError);
}

TEST_CASE("validate_basis: unitarily rotated basis remains a basis") {
  auto rng = make_rng(11);
  for (std::size_t d : {2, 3}) {
    // A Haar-ish unitary from the eigenvectors of a random Hermitian.
    const ComplexMatrix u = eigh(random_hermitian(d * d, rng)).eigenvectors;
    const OperatorBasis e = OperatorBasis::gellmann(d);
    std::vector<ComplexMatrix> rotated;
    for (std::size_t b = 0; b < e.size(); ++b) {
      ComplexMatrix f(d, d);
      for (std::size_t a = 0; a < e.size(); ++a)
        f = f + u(a, b) * e.element(a);
      rotated.push_back(std::move(f));
    }
    const OperatorBasis custom = OperatorBasis::custom(d, rotated);
    CHECK(validate_basis(custom).passed);
  }
}

TEST_CASE("qudit dimension below 2 is rejected") {
  CHECK_THROWS_AS(OperatorBasis::transition(1), ValidationError);
  CHECK_THROWS_AS(OperatorBasis::gellmann(0), ValidationError);
}

TEST_CASE("change_of_basis_unitary: identity, known entries, unitarity") {
  const OperatorBasis pi = OperatorBasis::transition(2);
  const OperatorBasis gm = OperatorBasis::gellmann(2);

  CHECK(max_abs_diff(change_of_basis_unitary(pi, pi),
                     ComplexMatrix::identity(4)) == 0.0);

  // The column for u_{0,1} carries 1/sqrt(2) at the pi_(0,1) and pi_(1,0)
  // rows.
  const ComplexMatrix u = change_of_basis_unitary(pi, gm);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u(1, 1) - cplx(s)) < 1e-15);
  CHECK(std::abs(u(2, 1) - cplx(s)) < 1e-15);
  CHECK(std::abs(u(0, 1)) < 1e-15);
  CHECK(std::abs(u(3, 1)) < 1e-15);

  for (std::size_t d : {2, 3})
    for (BasisKind ka : kCanonicalKinds)
      for (BasisKind kb : kCanonicalKinds) {
        const ComplexMatrix v =
            change_of_basis_unitary(canonical(ka, d), canonical(kb, d));
        CHECK(max_abs_diff(matmul(dagger(v), v),
                           ComplexMatrix::identity(d * d)) < 1e-12);
      }

  CHECK_THROWS_AS(change_of_basis_unitary(OperatorBasis::gellmann(2),
                                          OperatorBasis::gellmann(3)),
                  DimensionError);
}

TEST_CASE("change_of_basis_unitary composes transitively") {
  for (std::size_t d : {2, 3}) {
    const OperatorBasis b1 = OperatorBasis::transition(d);
    const OperatorBasis b2 = OperatorBasis::weyl(d);
    const OperatorBasis b3 = OperatorBasis::gellmann(d);
    const ComplexMatrix lhs = matmul(change_of_basis_unitary(b1, b2),
                                     change_of_basis_unitary(b2, b3));
    CHECK(max_abs_diff(lhs, change_of_basis_unitary(b1, b3)) < 1e-10);
  }
}

TEST_CASE("isotropic state and swap operator: explicit d = 2 matrices") {
  const ComplexMatrix rho = isotropic_state(2);
  ComplexMatrix want(4, 4);
  want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 0.5;
  CHECK(max_abs_diff(rho, want) == 0.0);

  const ComplexMatrix v = swap_operator(2);
  ComplexMatrix want_swap(4, 4);
  want_swap(0, 0) = want_swap(1, 2) = want_swap(2, 1) = want_swap(3, 3) = 1.0;
  CHECK(max_abs_diff(v, want_swap) == 0.0);
}

TEST_CASE("isotropic-state and swap sums are basis independent") {
  for (std::size_t d : {2, 3, 4})
    for (BasisKind kind : kCanonicalKinds) {
      const OperatorBasis b = canonical(kind, d);

      ComplexMatrix iso_sum(d * d, d * d);
      ComplexMatrix swap_sum(d * d, d * d);
      for (const auto &e : b.elements()) {
        iso_sum = iso_sum + kron(e, conjugate(e));
        swap_sum = swap_sum + kron(e, dagger(e));
      }
      iso_sum = (1.0 / static_cast<double>(d)) * iso_sum;

      CHECK(max_abs_diff(iso_sum, isotropic_state(d)) < 1e-12);
      CHECK(max_abs_diff(swap_sum, swap_operator(d)) < 1e-12);
    }
}

TEST_CASE("partial transpose maps the isotropic state to the swap operator") {
  for (std::size_t d : {2, 3, 4}) {
    const ComplexMatrix lhs = partial_transpose(
        static_cast<double>(d) * isotropic_state(d), {d, d}, 1);
    CHECK(max_abs_diff(lhs, swap_operator(d)) < 1e-15);
  }
}

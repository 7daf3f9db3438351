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

#include <limits>

#include <doctest.h>

#include "qopmat/errors.hpp"
#include "qopmat/linalg.hpp"
#include "test_support.hpp"

using namespace qopmat;
using namespace qopmat::testing;

TEST_CASE("matmul: identity, involution, oracle") {
  auto rng = make_rng(1);
  const ComplexMatrix a = random_matrix(2, rng);
  CHECK(max_abs_diff(matmul(ComplexMatrix::identity(2), a), a) == 0.0);

  const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
  CHECK(max_abs_diff(matmul(x, x), ComplexMatrix::identity(2)) == 0.0);

  const ComplexMatrix p = random_matrix(3, rng);
  const ComplexMatrix q = random_matrix(3, rng);
  CHECK(max_abs_diff(matmul(p, q), oracle_matmul(p, q)) < 1e-14);
}

TEST_CASE("matmul: dimension mismatch rejected") {
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 2)),
                  DimensionError);
}

TEST_CASE("kron: identities and mixed-product property") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  auto rng = make_rng(2);
  const ComplexMatrix a = random_matrix(3, rng);
  CHECK(max_abs_diff(kron(a, ComplexMatrix::identity(1)), a) == 0.0);

  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix p = random_matrix(2, rng), q = random_matrix(2, rng);
    const ComplexMatrix r = random_matrix(2, rng), s = random_matrix(2, rng);
    CHECK(max_abs_diff(matmul(kron(p, q), kron(r, s)),
                       kron(matmul(p, r), matmul(q, s))) < 1e-13);
  }
}

TEST_CASE("hs_inner, trace, dagger") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(hs_inner(i2, i2) == cplx(2.0, 0.0));

  const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix sy{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
  CHECK(std::abs(hs_inner(sx, sy)) == 0.0);

  auto rng = make_rng(3);
  const ComplexMatrix a = random_matrix(4, rng);
  CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);

  // Conjugate symmetry of the inner product.
  const ComplexMatrix b = random_matrix(4, rng);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-13);

  CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(hs_inner(ComplexMatrix(2, 2), ComplexMatrix(3, 3)),
                  DimensionError);
}

TEST_CASE("eigh: known spectra") {
  const ComplexMatrix diag{{3.0, 0.0}, {0.0, 1.0}};
  const EigenDecomposition e = eigh(diag);
  CHECK(e.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs(e.eigenvectors - ComplexMatrix::identity(2)) < 1e-14);

  // Characteristic polynomial of [[0,1],[1,0]] is l^2 - 1: eigenvalues 1, -1.
  const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
  const EigenDecomposition ex = eigh(sx);
  CHECK(ex.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ex.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("eigh: reconstruction and unitarity on random Hermitian input") {
  auto rng = make_rng(4);
  for (std::size_t dim : {2, 9, 33, 64}) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    const EigenDecomposition e = eigh(h);

    CHECK(max_abs_diff(matmul(dagger(e.eigenvectors), e.eigenvectors),
                       ComplexMatrix::identity(dim)) < 1e-10);

    ComplexMatrix scaled(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        scaled(i, k) = e.eigenvectors(i, k) * e.eigenvalues[k];
    CHECK(max_abs_diff(matmul(scaled, dagger(e.eigenvectors)), h) < 1e-10);

    for (std::size_t k = 1; k < dim; ++k)
      CHECK(e.eigenvalues[k - 1] >= e.eigenvalues[k]);
  }
}

TEST_CASE("eigh: non-Hermitian input rejected with measured deviation") {
  ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
  try {
    eigh(a);
    FAIL("expected NotHermitianError");
  } catch (const NotHermitianError &e) {
    CHECK(e.deviation() == doctest::Approx(1.0));
  }

  ComplexMatrix nan2(2, 2);
  nan2(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eigh(nan2), ValidationError);
}

TEST_CASE("partial_trace: identities and Liouville dyadic rules") {
  const ComplexMatrix traced =
      partial_trace(ComplexMatrix::identity(4), {2, 2}, {1});
  CHECK(max_abs_diff(traced, 2.0 * ComplexMatrix::identity(2)) == 0.0);

  auto rng = make_rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(2, rng);
    const ComplexMatrix dyad = oracle_dyadic(a, b);
    // Tr_2 |A>><<B| = A B^dag and Tr_1 |A>><<B| = A^T B^* .
    CHECK(max_abs_diff(partial_trace(dyad, {2, 2}, {1}),
                       matmul(a, dagger(b))) < 1e-13);
    CHECK(max_abs_diff(partial_trace(dyad, {2, 2}, {0}),
                       matmul(transpose(a), conjugate(b))) < 1e-13);
  }

  // Tracing every factor is the full trace.
  const ComplexMatrix m = random_matrix(6, rng);
  const ComplexMatrix full = partial_trace(m, {2, 3}, {0, 1});
  CHECK(std::abs(full(0, 0) - trace(m)) < 1e-13);

  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 3}, {0}),
                  DimensionError);
}

TEST_CASE("partial_transpose: identity, involution, isotropic-to-swap") {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  CHECK(max_abs_diff(partial_transpose(i4, {2, 2}, 1), i4) == 0.0);

  auto rng = make_rng(6);
  const ComplexMatrix m = random_matrix(4, rng);
  CHECK(max_abs_diff(
            partial_transpose(partial_transpose(m, {2, 2}, 0), {2, 2}, 0),
            m) == 0.0);

  // Partial transpose of d*rho_I on the second factor is the
  // swap operator. Explicit 4x4 matrices for d = 2.
  ComplexMatrix d_rho_i(4, 4);
  d_rho_i(0, 0) = d_rho_i(0, 3) = d_rho_i(3, 0) = d_rho_i(3, 3) = 1.0;
  ComplexMatrix swap(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  CHECK(max_abs_diff(partial_transpose(d_rho_i, {2, 2}, 1), swap) == 0.0);

  CHECK_THROWS_AS(partial_transpose(i4, {2, 2}, 2), DimensionError);
}

TEST_CASE("tensor_permute: explicit relabeling") {
  auto rng = make_rng(7);
  const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(3, rng);
  const ComplexMatrix ab = kron(a, b);
  const ComplexMatrix ba = kron(b, a);
  CHECK(max_abs_diff(tensor_permute(ab, {2, 3}, {1, 0}), ba) == 0.0);
  CHECK_THROWS_AS(tensor_permute(ab, {2, 3}, {0, 0}), DimensionError);
}

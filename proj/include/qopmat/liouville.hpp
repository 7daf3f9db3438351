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

#ifndef QOPMAT_LIOUVILLE_HPP_
#define QOPMAT_LIOUVILLE_HPP_

#include "qopmat/linalg.hpp"

namespace qopmat {

/// A d x d operator flattened into Liouville space: the row-major stacking
/// of its entries into a length-d^2 supervector.
struct LVector {
  std::size_t d = 0;
  std::vector<cplx> entries;
};

/// Row-major vectorization: vec(A)[d*i + j] = A(i, j).
LVector vec(const ComplexMatrix &a);

/// Inverse of vec; exact.
ComplexMatrix unvec(const LVector &v);

/// L-space inner product <<a|b>>, conjugate-linear in the first argument;
/// equals hs_inner(unvec(a), unvec(b)).
cplx lv_dot(const LVector &a, const LVector &b);

/// The reshuffling bijection: for row-major composite indices,
/// out[(i,k),(j,l)] = in[(i,j),(k,l)]. It is an involutory entry
/// permutation exchanging Kronecker-product and dyadic-product structure
/// on the doubled space; it does not preserve Hermiticity.
ComplexMatrix reshuffle(const ComplexMatrix &x, std::size_t d);

/// Reshuffling applied independently to each of n (output, mirror) factor
/// pairs of a d^{2n} x d^{2n} matrix in pair-major (interleaved) ordering.
/// reshuffle_multi(x, d, 1) == reshuffle(x, d).
ComplexMatrix reshuffle_multi(const ComplexMatrix &x, std::size_t d,
                              std::size_t n);

} // namespace qopmat

#endif // QOPMAT_LIOUVILLE_HPP_

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

#include "qopmat/liouville.hpp"

#include <cmath>

#include "qopmat/errors.hpp"

namespace qopmat {

LVector vec(const ComplexMatrix &a) {
  if (!a.is_square())
    throw DimensionError("vec: operator must be square");
  return LVector{a.rows(), a.entries()};
}

ComplexMatrix unvec(const LVector &v) {
  return ComplexMatrix(v.d, v.d, v.entries);
}

cplx lv_dot(const LVector &a, const LVector &b) {
  if (a.d != b.d)
    throw DimensionError("lv_dot: dimension mismatch");
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    t += std::conj(a.entries[i]) * b.entries[i];
  return t;
}

ComplexMatrix reshuffle(const ComplexMatrix &x, std::size_t d) {
  return reshuffle_multi(x, d, 1);
}

ComplexMatrix reshuffle_multi(const ComplexMatrix &x, std::size_t d,
                              std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t k = 0; k < 2 * n; ++k)
    dim *= d;
  if (!x.is_square() || x.rows() != dim)
    throw DimensionError("reshuffle: matrix is not d^(2n) x d^(2n)");

  // Per pair p the output picks up row digits (i_p, k_p) and column digits
  // (j_p, l_p) from input row (i_p, j_p) and column (k_p, l_p). Pure entry
  // permutation, hence exact.
  ComplexMatrix out(dim, dim);
  std::vector<std::size_t> rd(2 * n), cd(2 * n), nr(2 * n), nc(2 * n);
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t tmp = r;
    for (std::size_t k = 2 * n; k-- > 0;) {
      rd[k] = tmp % d;
      tmp /= d;
    }
    for (std::size_t c = 0; c < dim; ++c) {
      tmp = c;
      for (std::size_t k = 2 * n; k-- > 0;) {
        cd[k] = tmp % d;
        tmp /= d;
      }
      for (std::size_t p = 0; p < n; ++p) {
        nr[2 * p] = rd[2 * p];     // i_p
        nr[2 * p + 1] = cd[2 * p]; // k_p
        nc[2 * p] = rd[2 * p + 1]; // j_p
        nc[2 * p + 1] = cd[2 * p + 1]; // l_p
      }
      std::size_t nri = 0, nci = 0;
      for (std::size_t k = 0; k < 2 * n; ++k) {
        nri = nri * d + nr[k];
        nci = nci * d + nc[k];
      }
      out(nri, nci) = x(r, c);
    }
  }
  return out;
}

} // namespace qopmat

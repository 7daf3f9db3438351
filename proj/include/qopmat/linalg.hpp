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

#ifndef QOPMAT_LINALG_HPP_
#define QOPMAT_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <vector>

namespace qopmat {

using cplx = std::complex<double>;

//=========================================================================
// ComplexMatrix
//=========================================================================

/// Dense complex matrix with row-major storage. Row-major ordering is a
/// global convention: vectorization, composite indices and all tensor
/// factor bookkeeping depend on it.
class ComplexMatrix {
public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  /// Build from nested initializer lists, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<cplx> &entries() const { return data_; }
  std::vector<cplx> &entries() { return data_; }

  bool all_finite() const;

private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, const ComplexMatrix &a);
ComplexMatrix operator*(double s, const ComplexMatrix &a);

//=========================================================================
// Elementary operations
//=========================================================================

/// Matrix product a*b. Throws DimensionError on shape mismatch.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product with block-of-a-times-b layout: composite row-major
/// index d*i + j corresponds to the factor ordering |i> (x) |j>.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);

/// Trace of a square matrix.
cplx trace(const ComplexMatrix &a);

/// Hilbert-Schmidt inner product Tr a^dag b; conjugate-linear in the
/// first argument.
cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

double max_abs(const ComplexMatrix &a);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Max-abs entry of a - a^dag (0 for exactly Hermitian input).
double hermiticity_deviation(const ComplexMatrix &a);

//=========================================================================
// Tensor factor bookkeeping (row-major composite indices throughout)
//=========================================================================

/// Partial trace over the factors named in `traced` (0-based positions
/// into `dims`). The product of dims must equal the matrix dimension.
ComplexMatrix partial_trace(const ComplexMatrix &a,
                            const std::vector<std::size_t> &dims,
                            const std::set<std::size_t> &traced);

/// Transposition of a single tensor factor (0-based).
ComplexMatrix partial_transpose(const ComplexMatrix &a,
                                const std::vector<std::size_t> &dims,
                                std::size_t factor);

/// Relabels tensor factors on rows and columns alike: output factor j is
/// input factor perm[j]. perm must be a permutation of 0..dims.size()-1.
ComplexMatrix tensor_permute(const ComplexMatrix &a,
                             const std::vector<std::size_t> &dims,
                             const std::vector<std::size_t> &perm);

//=========================================================================
// Hermitian eigendecomposition
//=========================================================================

struct EigenDecomposition {
  std::vector<double> eigenvalues; ///< sorted descending
  ComplexMatrix eigenvectors;      ///< columns are orthonormal eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (a + a^dag)/2 before decomposing; inputs deviating from Hermiticity by
/// more than 1e-10 (max-abs entry of a - a^dag) are rejected with a
/// NotHermitianError carrying the measured deviation.
EigenDecomposition eigh(const ComplexMatrix &a);

} // namespace qopmat

#endif // QOPMAT_LINALG_HPP_

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

#include "qopmat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "qopmat/errors.hpp"

namespace qopmat {

namespace {

using EigenRowMajor =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> as_eigen(const ComplexMatrix &m) {
  return {m.entries().data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

std::size_t dims_product(const std::vector<std::size_t> &dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

void decode_index(std::size_t idx, const std::vector<std::size_t> &dims,
                  std::vector<std::size_t> &digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = idx % dims[k];
    idx /= dims[k];
  }
}

std::size_t encode_index(const std::vector<std::size_t> &digits,
                         const std::vector<std::size_t> &dims) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k)
    idx = idx * dims[k] + digits[k];
  return idx;
}

void require_square(const ComplexMatrix &a, const char *what) {
  if (!a.is_square())
    throw DimensionError(std::string(what) + ": matrix must be square");
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionError("ComplexMatrix: entry count does not match shape");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx &z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      return false;
  return true;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("operator+: shape mismatch");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.entries().size(); ++i)
    out.entries()[i] = a.entries()[i] + b.entries()[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("operator-: shape mismatch");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.entries().size(); ++i)
    out.entries()[i] = a.entries()[i] - b.entries()[i];
  return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix &a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.entries().size(); ++i)
    out.entries()[i] = s * a.entries()[i];
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix &a) {
  return cplx(s, 0.0) * a;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: inner dimensions do not match");
  ComplexMatrix out(a.rows(), b.cols());
  Eigen::Map<EigenRowMajor> result(out.entries().data(),
                                   static_cast<Eigen::Index>(out.rows()),
                                   static_cast<Eigen::Index>(out.cols()));
  result.noalias() = as_eigen(a) * as_eigen(b);
  return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0))
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = a(i, j);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.entries().size(); ++i)
    out.entries()[i] = std::conj(a.entries()[i]);
  return out;
}

cplx trace(const ComplexMatrix &a) {
  require_square(a, "trace");
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    t += a(i, i);
  return t;
}

cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
    throw DimensionError("hs_inner: operands must be square and equal-sized");
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    t += std::conj(a.entries()[i]) * b.entries()[i];
  return t;
}

double max_abs(const ComplexMatrix &a) {
  double m = 0.0;
  for (const cplx &z : a.entries())
    m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double hermiticity_deviation(const ComplexMatrix &a) {
  require_square(a, "hermiticity_deviation");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

ComplexMatrix partial_trace(const ComplexMatrix &a,
                            const std::vector<std::size_t> &dims,
                            const std::set<std::size_t> &traced) {
  require_square(a, "partial_trace");
  if (dims_product(dims) != a.rows())
    throw DimensionError("partial_trace: dims do not factor the matrix size");
  for (std::size_t f : traced)
    if (f >= dims.size())
      throw DimensionError("partial_trace: traced factor out of range");

  std::vector<std::size_t> kept, kept_dims, traced_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (traced.count(k))
      traced_dims.push_back(dims[k]);
    else {
      kept.push_back(k);
      kept_dims.push_back(dims[k]);
    }
  }
  const std::size_t out_dim = dims_product(kept_dims);
  const std::size_t tr_dim = dims_product(traced_dims);
  ComplexMatrix out(out_dim, out_dim);

  std::vector<std::size_t> rk(kept.size()), ck(kept.size()),
      td(traced_dims.size()), full_r(dims.size()), full_c(dims.size());
  for (std::size_t r = 0; r < out_dim; ++r) {
    decode_index(r, kept_dims, rk);
    for (std::size_t c = 0; c < out_dim; ++c) {
      decode_index(c, kept_dims, ck);
      cplx acc(0.0, 0.0);
      for (std::size_t t = 0; t < tr_dim; ++t) {
        decode_index(t, traced_dims, td);
        std::size_t ik = 0, it = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
          if (traced.count(k)) {
            full_r[k] = td[it];
            full_c[k] = td[it];
            ++it;
          } else {
            full_r[k] = rk[ik];
            full_c[k] = ck[ik];
            ++ik;
          }
        }
        acc += a(encode_index(full_r, dims), encode_index(full_c, dims));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &a,
                                const std::vector<std::size_t> &dims,
                                std::size_t factor) {
  require_square(a, "partial_transpose");
  if (dims_product(dims) != a.rows())
    throw DimensionError(
        "partial_transpose: dims do not factor the matrix size");
  if (factor >= dims.size())
    throw DimensionError("partial_transpose: factor index out of range");

  ComplexMatrix out(a.rows(), a.cols());
  std::vector<std::size_t> rd(dims.size()), cd(dims.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    decode_index(r, dims, rd);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      decode_index(c, dims, cd);
      std::swap(rd[factor], cd[factor]);
      out(encode_index(rd, dims), encode_index(cd, dims)) = a(r, c);
      std::swap(rd[factor], cd[factor]);
    }
  }
  return out;
}

ComplexMatrix tensor_permute(const ComplexMatrix &a,
                             const std::vector<std::size_t> &dims,
                             const std::vector<std::size_t> &perm) {
  require_square(a, "tensor_permute");
  if (dims_product(dims) != a.rows())
    throw DimensionError("tensor_permute: dims do not factor the matrix size");
  if (perm.size() != dims.size())
    throw DimensionError("tensor_permute: permutation length mismatch");
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t p : perm) {
    if (p >= dims.size() || seen[p])
      throw DimensionError("tensor_permute: not a permutation");
    seen[p] = true;
  }

  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t j = 0; j < perm.size(); ++j)
    new_dims[j] = dims[perm[j]];

  ComplexMatrix out(a.rows(), a.cols());
  std::vector<std::size_t> rd(dims.size()), cd(dims.size()),
      nr(dims.size()), nc(dims.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    decode_index(r, dims, rd);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      decode_index(c, dims, cd);
      for (std::size_t j = 0; j < perm.size(); ++j) {
        nr[j] = rd[perm[j]];
        nc[j] = cd[perm[j]];
      }
      out(encode_index(nr, new_dims), encode_index(nc, new_dims)) = a(r, c);
    }
  }
  return out;
}

EigenDecomposition eigh(const ComplexMatrix &a) {
  require_square(a, "eigh");
  if (!a.all_finite())
    throw ValidationError("eigh: input has non-finite entries");
  const double dev = hermiticity_deviation(a);
  if (dev > 1e-10)
    throw NotHermitianError("eigh: input is not Hermitian (max |a - a^dag| = " +
                                std::to_string(dev) + ")",
                            dev);

  // Symmetrize to suppress roundoff before handing off to the solver.
  const std::size_t n = a.rows();
  EigenRowMajor h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(h);
  if (solver.info() != Eigen::Success)
    throw Error("eigh: eigensolver failed to converge");

  // Eigen yields ascending eigenvalues; the contract is descending.
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = n - 1 - k;
    out.eigenvalues[k] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, k) = solver.eigenvectors()(
          static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(src));
  }
  return out;
}

} // namespace qopmat

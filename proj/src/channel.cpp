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

#include "qopmat/channel.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "qopmat/errors.hpp"
#include "qopmat/liouville.hpp"

namespace qopmat {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

void require_same_d(const std::vector<OperatorBasis> &basis) {
  if (basis.empty())
    throw DimensionError("channel: at least one per-qudit basis required");
  for (const auto &b : basis)
    if (b.d() != basis.front().d())
      throw DimensionError("channel: per-qudit bases disagree on d");
}

void check_size_guard(std::size_t dim) {
  if (dim > size_cap())
    throw ValidationError("matrix size " + std::to_string(dim) +
                          " exceeds the size cap " +
                          std::to_string(size_cap()) +
                          " (QOPMAT_SIZE_CAP overrides)");
}

void require_kit_match(const std::vector<OperatorBasis> &basis,
                       const std::vector<ConversionKit> &kits,
                       std::size_t n) {
  if (kits.size() != n)
    throw DimensionError("conversion: expected one kit per qudit");
  for (std::size_t k = 0; k < n; ++k)
    if (!same_basis(basis[k], kits[k].basis))
      throw DimensionError("conversion: kit basis differs from channel basis");
}

/// out = sum over multi-index g of (kron_k Q_k^{g_k}) X (kron_k R_k^{g_k}).
ComplexMatrix kit_sum(const ComplexMatrix &x,
                      const std::vector<ConversionKit> &kits) {
  const std::size_t n = kits.size();
  const std::size_t terms_per_qudit = kits.front().Q.size();
  std::vector<std::size_t> g(n, 0);
  ComplexMatrix out(x.rows(), x.cols());
  for (;;) {
    ComplexMatrix q = kits[0].Q[g[0]];
    ComplexMatrix r = kits[0].R[g[0]];
    for (std::size_t k = 1; k < n; ++k) {
      q = kron(q, kits[k].Q[g[k]]);
      r = kron(r, kits[k].R[g[k]]);
    }
    out = out + matmul(matmul(q, x), r);

    std::size_t k = n;
    while (k-- > 0) {
      if (++g[k] < terms_per_qudit)
        break;
      g[k] = 0;
      if (k == 0)
        return out;
    }
  }
}

std::vector<ComplexMatrix>
all_product_elements(const std::vector<OperatorBasis> &basis) {
  const std::size_t count = [&] {
    std::size_t c = 1;
    for (const auto &b : basis)
      c *= b.size();
    return c;
  }();
  std::vector<ComplexMatrix> out;
  out.reserve(count);
  for (std::size_t packed = 0; packed < count; ++packed)
    out.push_back(product_basis_element(basis, packed));
  return out;
}

} // namespace

std::size_t channel_d(const Channel &c) {
  return std::visit([](const auto &r) { return r.d; }, c);
}

std::size_t channel_n(const Channel &c) {
  return std::visit([](const auto &r) { return r.n; }, c);
}

SMatrix make_smatrix(std::vector<OperatorBasis> basis, ComplexMatrix data) {
  require_same_d(basis);
  const std::size_t d = basis.front().d();
  const std::size_t n = basis.size();
  const std::size_t dim = ipow(d, 2 * n);
  if (data.rows() != dim || data.cols() != dim)
    throw DimensionError("SMatrix: data must be d^(2n) x d^(2n)");
  if (!data.all_finite())
    throw ValidationError("SMatrix: non-finite entries");
  return SMatrix{d, n, std::move(basis), std::move(data)};
}

ChiMatrix make_chi(std::vector<OperatorBasis> basis, ComplexMatrix data) {
  require_same_d(basis);
  const std::size_t d = basis.front().d();
  const std::size_t n = basis.size();
  const std::size_t dim = ipow(d, 2 * n);
  if (data.rows() != dim || data.cols() != dim)
    throw DimensionError("ChiMatrix: data must be d^(2n) x d^(2n)");
  if (!data.all_finite())
    throw ValidationError("ChiMatrix: non-finite entries");
  return ChiMatrix{d, n, std::move(basis), std::move(data)};
}

KrausChannel make_kraus(std::size_t d, std::size_t n,
                        std::vector<ComplexMatrix> operators) {
  const std::size_t dim = ipow(d, n);
  for (const auto &k : operators) {
    if (k.rows() != dim || k.cols() != dim)
      throw DimensionError("KrausChannel: operator must be d^n x d^n");
    if (!k.all_finite())
      throw ValidationError("KrausChannel: non-finite entries");
  }
  return KrausChannel{d, n, std::move(operators)};
}

//=========================================================================
// Conversion kit
//=========================================================================

ConversionKit build_kit(const OperatorBasis &basis) {
  static std::mutex cache_mutex;
  static std::map<std::pair<std::string, std::size_t>, ConversionKit> cache;

  const bool cacheable = basis.kind() != BasisKind::custom;
  const auto key = std::make_pair(to_string(basis.kind()), basis.d());
  if (cacheable) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }

  const std::size_t d = basis.d();
  const std::size_t d2 = d * d;
  const ComplexMatrix frame = product_basis_frame({basis});
  const ComplexMatrix frame_dag = dagger(frame);
  const OperatorBasis pi = OperatorBasis::transition(d);
  const ComplexMatrix id = ComplexMatrix::identity(d);

  ConversionKit kit{d, basis, {}, {}};
  kit.Q.reserve(d2);
  kit.R.reserve(d2);
  for (std::size_t g = 0; g < d2; ++g) {
    kit.Q.push_back(
        matmul(frame_dag, matmul(kron(id, pi.element(g)), frame)));
    kit.R.push_back(
        matmul(frame_dag, matmul(kron(pi.element(g), id), frame)));
  }

  const ComplexMatrix m = kit_m_matrix(kit);
  const double herm = hermiticity_deviation(m);
  const double unit =
      max_abs_diff(matmul(dagger(m), m), ComplexMatrix::identity(d2 * d2));
  if (herm > 1e-10 || unit > 1e-10)
    throw ValidationError(
        "build_kit: induced M matrix is not Hermitian-unitary (deviations " +
        std::to_string(herm) + ", " + std::to_string(unit) +
        "); basis is invalid");

  if (cacheable) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, kit);
  }
  return kit;
}

std::pair<ConversionKit, ConversionKit>
build_two_qudit_kit(const OperatorBasis &basisE, const OperatorBasis &basisF) {
  if (basisE.d() != basisF.d())
    throw DimensionError("build_two_qudit_kit: bases disagree on d");
  return {build_kit(basisE), build_kit(basisF)};
}

ComplexMatrix kit_m_matrix(const ConversionKit &kit) {
  const std::size_t d2 = kit.d * kit.d;
  ComplexMatrix m(d2 * d2, d2 * d2);
  for (std::size_t ap = 0; ap < d2; ++ap)
    for (std::size_t bp = 0; bp < d2; ++bp)
      for (std::size_t a = 0; a < d2; ++a)
        for (std::size_t b = 0; b < d2; ++b) {
          cplx acc(0.0, 0.0);
          for (std::size_t g = 0; g < d2; ++g)
            acc += kit.Q[g](ap, a) * kit.R[g](b, bp);
          m(ap * d2 + bp, a * d2 + b) = acc;
        }
  return m;
}

//=========================================================================
// chi <-> S conversions
//=========================================================================

SMatrix chi_to_s(const ChiMatrix &chi, const ConversionKit &kit) {
  if (chi.n != 1)
    throw DimensionError("chi_to_s: single-qudit path requires n = 1");
  require_kit_match(chi.basis, {kit}, 1);
  ComplexMatrix out(chi.data.rows(), chi.data.cols());
  for (std::size_t g = 0; g < kit.Q.size(); ++g)
    out = out + matmul(matmul(kit.Q[g], chi.data), kit.R[g]);
  return SMatrix{chi.d, 1, chi.basis, std::move(out)};
}

ChiMatrix s_to_chi(const SMatrix &s, const ConversionKit &kit) {
  if (s.n != 1)
    throw DimensionError("s_to_chi: single-qudit path requires n = 1");
  require_kit_match(s.basis, {kit}, 1);
  ComplexMatrix out(s.data.rows(), s.data.cols());
  for (std::size_t g = 0; g < kit.Q.size(); ++g)
    out = out + matmul(matmul(kit.Q[g], s.data), kit.R[g]);
  return ChiMatrix{s.d, 1, s.basis, std::move(out)};
}

SMatrix chi_to_s_2(const ChiMatrix &chi, const ConversionKit &kitE,
                   const ConversionKit &kitF) {
  if (chi.n != 2)
    throw DimensionError("chi_to_s_2: requires n = 2");
  require_kit_match(chi.basis, {kitE, kitF}, 2);
  ComplexMatrix out(chi.data.rows(), chi.data.cols());
  for (std::size_t g = 0; g < kitE.Q.size(); ++g)
    for (std::size_t l = 0; l < kitF.Q.size(); ++l)
      out = out + matmul(matmul(kron(kitE.Q[g], kitF.Q[l]), chi.data),
                         kron(kitE.R[g], kitF.R[l]));
  return SMatrix{chi.d, 2, chi.basis, std::move(out)};
}

ChiMatrix s_to_chi_2(const SMatrix &s, const ConversionKit &kitE,
                     const ConversionKit &kitF) {
  if (s.n != 2)
    throw DimensionError("s_to_chi_2: requires n = 2");
  require_kit_match(s.basis, {kitE, kitF}, 2);
  ComplexMatrix out(s.data.rows(), s.data.cols());
  for (std::size_t g = 0; g < kitE.Q.size(); ++g)
    for (std::size_t l = 0; l < kitF.Q.size(); ++l)
      out = out + matmul(matmul(kron(kitE.Q[g], kitF.Q[l]), s.data),
                         kron(kitE.R[g], kitF.R[l]));
  return ChiMatrix{s.d, 2, s.basis, std::move(out)};
}

SMatrix chi_to_s_n(const ChiMatrix &chi,
                   const std::vector<ConversionKit> &kits) {
  require_kit_match(chi.basis, kits, chi.n);
  check_size_guard(chi.data.rows());
  return SMatrix{chi.d, chi.n, chi.basis, kit_sum(chi.data, kits)};
}

ChiMatrix s_to_chi_n(const SMatrix &s, const std::vector<ConversionKit> &kits) {
  require_kit_match(s.basis, kits, s.n);
  check_size_guard(s.data.rows());
  return ChiMatrix{s.d, s.n, s.basis, kit_sum(s.data, kits)};
}

//=========================================================================
// Superoperator / Choi matrices
//=========================================================================

ComplexMatrix superop_matrix(const KrausChannel &k) {
  const std::size_t dim = ipow(k.d, k.n);
  ComplexMatrix out(dim * dim, dim * dim);
  for (const auto &op : k.operators)
    out = out + kron(op, conjugate(op));
  return out;
}

ComplexMatrix superop_matrix(const ChiMatrix &chi) {
  const auto elems = all_product_elements(chi.basis);
  const std::size_t m = elems.size();
  ComplexMatrix out(chi.data.rows(), chi.data.cols());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const cplx w = chi.data(a, b);
      if (w == cplx(0.0, 0.0))
        continue;
      out = out + w * kron(elems[a], conjugate(elems[b]));
    }
  return out;
}

ComplexMatrix superop_matrix(const SMatrix &s) {
  const ComplexMatrix w = product_basis_frame(s.basis);
  const ComplexMatrix interleaved = matmul(matmul(w, s.data), dagger(w));
  return interleaved_to_vec(interleaved, s.d, s.n);
}

ComplexMatrix superop_matrix(const Channel &c) {
  return std::visit([](const auto &r) { return superop_matrix(r); }, c);
}

ComplexMatrix choi_matrix(const ChiMatrix &chi) {
  const ComplexMatrix w = product_basis_frame(chi.basis);
  return matmul(matmul(w, chi.data), dagger(w));
}

ComplexMatrix choi_matrix(const KrausChannel &k) {
  const std::size_t dim = ipow(k.d, k.n);
  ComplexMatrix big(dim * dim, dim * dim);
  for (const auto &op : k.operators) {
    const LVector v = vec(op);
    for (std::size_t i = 0; i < v.entries.size(); ++i)
      for (std::size_t j = 0; j < v.entries.size(); ++j)
        big(i, j) += v.entries[i] * std::conj(v.entries[j]);
  }
  return vec_to_interleaved(big, k.d, k.n);
}

ComplexMatrix choi_matrix(const SMatrix &s) {
  const ComplexMatrix w = product_basis_frame(s.basis);
  const ComplexMatrix interleaved = matmul(matmul(w, s.data), dagger(w));
  return reshuffle_multi(interleaved, s.d, s.n);
}

ComplexMatrix choi_matrix(const Channel &c) {
  return std::visit([](const auto &r) { return choi_matrix(r); }, c);
}

//=========================================================================
// Channel action
//=========================================================================

ComplexMatrix apply_kraus(const KrausChannel &k, const ComplexMatrix &rho) {
  const std::size_t dim = ipow(k.d, k.n);
  if (rho.rows() != dim || rho.cols() != dim)
    throw DimensionError("apply_kraus: state has wrong dimension");
  ComplexMatrix out(dim, dim);
  for (const auto &op : k.operators)
    out = out + matmul(matmul(op, rho), dagger(op));
  return out;
}

ComplexMatrix apply_channel(const Channel &c, const ComplexMatrix &rho) {
  if (const auto *k = std::get_if<KrausChannel>(&c))
    return apply_kraus(*k, rho);
  if (const auto *chi = std::get_if<ChiMatrix>(&c)) {
    const auto elems = all_product_elements(chi->basis);
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const cplx w = chi->data(a, b);
        if (w == cplx(0.0, 0.0))
          continue;
        out = out + w * matmul(matmul(elems[a], rho), dagger(elems[b]));
      }
    return out;
  }
  const auto &s = std::get<SMatrix>(c);
  const ComplexMatrix l = superop_matrix(s);
  const LVector v = vec(rho);
  LVector mapped{v.d, std::vector<cplx>(v.entries.size(), cplx(0.0, 0.0))};
  for (std::size_t i = 0; i < l.rows(); ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < l.cols(); ++j)
      acc += l(i, j) * v.entries[j];
    mapped.entries[i] = acc;
  }
  return unvec(mapped);
}

//=========================================================================
// Kraus extraction / ingestion
//=========================================================================

KrausChannel kraus_from_chi(const ChiMatrix &chi) {
  const EigenDecomposition eig = eigh(chi.data);
  const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0];
  const double lambda_min =
      eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
  if (lambda_min < -1e-9 * std::max(lambda_max, 0.0) || lambda_max < 0.0)
    throw NotCompletelyPositiveError(
        "kraus_from_chi: chi-matrix has a negative eigenvalue (" +
            std::to_string(lambda_min) + "); map is not completely positive",
        lambda_min);

  const auto elems = all_product_elements(chi.basis);
  const std::size_t dim = ipow(chi.d, chi.n);
  KrausChannel out{chi.d, chi.n, {}};
  for (std::size_t m = 0; m < eig.eigenvalues.size(); ++m) {
    const double lambda = eig.eigenvalues[m];
    if (lambda <= 1e-12 * lambda_max)
      continue;
    const double scale = std::sqrt(lambda);
    ComplexMatrix k(dim, dim);
    for (std::size_t a = 0; a < elems.size(); ++a) {
      const cplx coeff = scale * eig.eigenvectors(a, m);
      if (coeff == cplx(0.0, 0.0))
        continue;
      k = k + coeff * elems[a];
    }
    out.operators.push_back(std::move(k));
  }
  return out;
}

ChiMatrix chi_from_kraus(const KrausChannel &k,
                         std::vector<OperatorBasis> basis) {
  require_same_d(basis);
  if (basis.size() != k.n || basis.front().d() != k.d)
    throw DimensionError("chi_from_kraus: basis does not match the channel");
  const auto elems = all_product_elements(basis);
  const std::size_t m = elems.size();

  std::vector<std::vector<cplx>> coeffs;
  coeffs.reserve(k.operators.size());
  for (const auto &op : k.operators) {
    std::vector<cplx> c(m);
    for (std::size_t a = 0; a < m; ++a)
      c[a] = hs_inner(elems[a], op);
    coeffs.push_back(std::move(c));
  }

  ComplexMatrix chi(m, m);
  for (const auto &c : coeffs)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        chi(a, b) += c[a] * std::conj(c[b]);
  return ChiMatrix{k.d, k.n, std::move(basis), std::move(chi)};
}

//=========================================================================
// Basis changes
//=========================================================================

namespace {

ComplexMatrix change_frame(const std::vector<OperatorBasis> &from,
                           const std::vector<OperatorBasis> &to) {
  if (from.size() != to.size())
    throw DimensionError("change_basis: qudit count mismatch");
  ComplexMatrix u = change_of_basis_unitary(from[0], to[0]);
  for (std::size_t k = 1; k < from.size(); ++k)
    u = kron(u, change_of_basis_unitary(from[k], to[k]));
  return u;
}

bool same_bases(const std::vector<OperatorBasis> &a,
                const std::vector<OperatorBasis> &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!same_basis(a[k], b[k]))
      return false;
  return true;
}

} // namespace

ChiMatrix change_basis(const ChiMatrix &chi, std::vector<OperatorBasis> to) {
  if (same_bases(chi.basis, to))
    return chi;
  const ComplexMatrix u = change_frame(chi.basis, to);
  ComplexMatrix data = matmul(matmul(dagger(u), chi.data), u);
  return make_chi(std::move(to), std::move(data));
}

SMatrix change_basis(const SMatrix &s, std::vector<OperatorBasis> to) {
  if (same_bases(s.basis, to))
    return s;
  const ComplexMatrix u = change_frame(s.basis, to);
  ComplexMatrix data = matmul(matmul(dagger(u), s.data), u);
  return make_smatrix(std::move(to), std::move(data));
}

//=========================================================================
// Stock channels and gates
//=========================================================================

KrausChannel identity_channel(std::size_t d, std::size_t n) {
  return KrausChannel{d, n, {ComplexMatrix::identity(ipow(d, n))}};
}

KrausChannel unitary_channel(const ComplexMatrix &u, std::size_t d,
                             std::size_t n) {
  return make_kraus(d, n, {u});
}

KrausChannel depolarizing_channel(std::size_t d) {
  const OperatorBasis pi = OperatorBasis::transition(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexMatrix> ops;
  ops.reserve(pi.size());
  for (const auto &e : pi.elements())
    ops.push_back(scale * e);
  return KrausChannel{d, 1, std::move(ops)};
}

namespace gates {

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
  return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}

ComplexMatrix phase_s() { return {{1.0, 0.0}, {0.0, cplx(0.0, 1.0)}}; }

ComplexMatrix cnot() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

ComplexMatrix swap2() {
  return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

} // namespace gates

//=========================================================================
// Shared helpers
//=========================================================================

std::size_t size_cap() {
  const char *raw = std::getenv("QOPMAT_SIZE_CAP");
  if (raw == nullptr || *raw == '\0')
    return 4096;
  char *end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    throw ValidationError("QOPMAT_SIZE_CAP must be a positive integer");
  return static_cast<std::size_t>(value);
}

ComplexMatrix product_basis_frame(const std::vector<OperatorBasis> &basis) {
  require_same_d(basis);
  ComplexMatrix frame;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t d2 = basis[k].d() * basis[k].d();
    ComplexMatrix b(d2, d2);
    for (std::size_t a = 0; a < d2; ++a) {
      const LVector v = vec(basis[k].element(a));
      for (std::size_t i = 0; i < d2; ++i)
        b(i, a) = v.entries[i];
    }
    frame = (k == 0) ? std::move(b) : kron(frame, b);
  }
  return frame;
}

ComplexMatrix product_basis_element(const std::vector<OperatorBasis> &basis,
                                    std::size_t packed) {
  require_same_d(basis);
  const std::size_t d2 = basis.front().d() * basis.front().d();
  std::vector<std::size_t> digits(basis.size());
  for (std::size_t k = basis.size(); k-- > 0;) {
    digits[k] = packed % d2;
    packed /= d2;
  }
  ComplexMatrix out = basis[0].element(digits[0]);
  for (std::size_t k = 1; k < basis.size(); ++k)
    out = kron(out, basis[k].element(digits[k]));
  return out;
}

ComplexMatrix vec_to_interleaved(const ComplexMatrix &m, std::size_t d,
                                 std::size_t n) {
  if (n == 1)
    return m;
  std::vector<std::size_t> dims(2 * n, d), perm(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[2 * k] = k;
    perm[2 * k + 1] = n + k;
  }
  return tensor_permute(m, dims, perm);
}

ComplexMatrix interleaved_to_vec(const ComplexMatrix &m, std::size_t d,
                                 std::size_t n) {
  if (n == 1)
    return m;
  std::vector<std::size_t> dims(2 * n, d), perm(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[k] = 2 * k;
    perm[n + k] = 2 * k + 1;
  }
  return tensor_permute(m, dims, perm);
}

} // namespace qopmat

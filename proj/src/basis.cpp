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

#include "qopmat/basis.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qopmat/errors.hpp"

namespace qopmat {

namespace {

constexpr double kBasisTol = 1e-10;

void require_dim(std::size_t d, const char *what) {
  if (d < 2)
    throw ValidationError(std::string(what) + ": qudit dimension must be >= 2");
}

ComplexMatrix random_operator(std::size_t d, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (auto &z : a.entries())
    z = cplx(gauss(rng), gauss(rng));
  return a;
}

} // namespace

std::string to_string(BasisKind kind) {
  switch (kind) {
  case BasisKind::transition:
    return "transition";
  case BasisKind::weyl:
    return "weyl";
  case BasisKind::gellmann:
    return "gellmann";
  case BasisKind::custom:
    return "custom";
  }
  return "custom";
}

BasisKind basis_kind_from_string(const std::string &s) {
  if (s == "transition")
    return BasisKind::transition;
  if (s == "weyl")
    return BasisKind::weyl;
  if (s == "gellmann")
    return BasisKind::gellmann;
  if (s == "custom")
    return BasisKind::custom;
  throw ValidationError("unknown basis kind: " + s);
}

OperatorBasis OperatorBasis::transition(std::size_t d) {
  require_dim(d, "transition basis");
  std::vector<ComplexMatrix> elems;
  elems.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix pi(d, d);
      pi(i, j) = 1.0;
      elems.push_back(std::move(pi));
    }
  return OperatorBasis(d, BasisKind::transition, std::move(elems));
}

OperatorBasis OperatorBasis::weyl(std::size_t d) {
  require_dim(d, "weyl basis");
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexMatrix> elems;
  elems.reserve(d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      // U_(m,n) = w^{mn/2} sum_k w^{mk} |k+n mod d><k| / sqrt(d),
      // with the half phase fixed as exp(i*pi*m*n/d).
      const cplx half_phase = std::polar(
          1.0, std::numbers::pi * static_cast<double>(m * n) / d);
      ComplexMatrix u(d, d);
      for (std::size_t k = 0; k < d; ++k) {
        const cplx omega_mk = std::polar(
            1.0, 2.0 * std::numbers::pi * static_cast<double>(m * k) / d);
        u((k + n) % d, k) = half_phase * omega_mk * inv_sqrt_d;
      }
      elems.push_back(std::move(u));
    }
  return OperatorBasis(d, BasisKind::weyl, std::move(elems));
}

OperatorBasis OperatorBasis::gellmann(std::size_t d) {
  require_dim(d, "gellmann basis");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> elems;
  elems.reserve(d * d);

  ComplexMatrix id(d, d);
  for (std::size_t i = 0; i < d; ++i)
    id(i, i) = 1.0 / std::sqrt(static_cast<double>(d));
  elems.push_back(std::move(id));

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix u(d, d);
      u(i, j) = inv_sqrt2;
      u(j, i) = inv_sqrt2;
      elems.push_back(std::move(u));
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix v(d, d);
      v(i, j) = cplx(0.0, inv_sqrt2);
      v(j, i) = cplx(0.0, -inv_sqrt2);
      elems.push_back(std::move(v));
    }
  for (std::size_t k = 1; k < d; ++k) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    ComplexMatrix w(d, d);
    for (std::size_t i = 0; i < k; ++i)
      w(i, i) = -norm;
    w(k, k) = static_cast<double>(k) * norm;
    elems.push_back(std::move(w));
  }
  return OperatorBasis(d, BasisKind::gellmann, std::move(elems));
}

OperatorBasis OperatorBasis::custom(std::size_t d,
                                    std::vector<ComplexMatrix> elements) {
  require_dim(d, "custom basis");
  if (elements.size() != d * d)
    throw ValidationError("custom basis: expected d^2 elements");
  for (const auto &e : elements) {
    if (e.rows() != d || e.cols() != d)
      throw ValidationError("custom basis: element is not d x d");
    if (!e.all_finite())
      throw ValidationError("custom basis: element has non-finite entries");
  }
  const BasisReport report = validate_elements(d, elements);
  if (!report.passed)
    throw ValidationError(
        "custom basis: failed orthonormality/completeness validation "
        "(orthonormality " +
        std::to_string(report.orthonormality_deviation) + ", completeness " +
        std::to_string(report.completeness_deviation) + ")");
  return OperatorBasis(d, BasisKind::custom, std::move(elements));
}

bool OperatorBasis::is_hermitian(double tol) const {
  for (const auto &e : elements_)
    if (hermiticity_deviation(e) > tol)
      return false;
  return true;
}

bool same_basis(const OperatorBasis &a, const OperatorBasis &b) {
  if (a.d() != b.d() || a.size() != b.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (max_abs_diff(a.element(k), b.element(k)) > 1e-12)
      return false;
  return true;
}

BasisReport validate_basis(const OperatorBasis &b) {
  return validate_elements(b.d(), b.elements());
}

BasisReport validate_elements(std::size_t d,
                              const std::vector<ComplexMatrix> &elements) {
  require_dim(d, "validate_elements");
  if (elements.size() != d * d)
    throw ValidationError("validate_elements: expected d^2 elements");
  for (const auto &e : elements)
    if (e.rows() != d || e.cols() != d)
      throw ValidationError("validate_elements: element is not d x d");

  const std::size_t n = elements.size();
  BasisReport report;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const cplx g = hs_inner(elements[a], elements[c]);
      const cplx expected = (a == c) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      report.orthonormality_deviation =
          std::max(report.orthonormality_deviation, std::abs(g - expected));
    }

  // Completeness, exhaustively over the four state-basis indices:
  // sum_a <n|E_a^dag|m><l|E_a|k> = delta_nk delta_ml.
  for (std::size_t ni = 0; ni < d; ++ni)
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k) {
          cplx acc(0.0, 0.0);
          for (std::size_t a = 0; a < n; ++a)
            acc += std::conj(elements[a](m, ni)) * elements[a](l, k);
          const cplx expected =
              (ni == k && m == l) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
          report.completeness_deviation =
              std::max(report.completeness_deviation, std::abs(acc - expected));
        }

  // Reconstruction and depolarizing identities on a fixed random sample.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  for (int sample = 0; sample < 20; ++sample) {
    const ComplexMatrix a = random_operator(d, rng);

    ComplexMatrix rebuilt(d, d);
    for (std::size_t alpha = 0; alpha < n; ++alpha)
      rebuilt = rebuilt + hs_inner(elements[alpha], a) * elements[alpha];
    report.reconstruction_deviation =
        std::max(report.reconstruction_deviation, max_abs_diff(rebuilt, a));

    ComplexMatrix depol(d, d);
    for (std::size_t alpha = 0; alpha < n; ++alpha)
      depol =
          depol + matmul(matmul(elements[alpha], a), dagger(elements[alpha]));
    depol = (1.0 / static_cast<double>(d)) * depol;
    const ComplexMatrix expected =
        (trace(a) / static_cast<double>(d)) * ComplexMatrix::identity(d);
    report.depolarizing_deviation =
        std::max(report.depolarizing_deviation, max_abs_diff(depol, expected));
  }

  report.passed = report.orthonormality_deviation < kBasisTol &&
                  report.completeness_deviation < kBasisTol &&
                  report.reconstruction_deviation < kBasisTol &&
                  report.depolarizing_deviation < kBasisTol;
  return report;
}

ComplexMatrix change_of_basis_unitary(const OperatorBasis &from,
                                      const OperatorBasis &to) {
  if (from.d() != to.d())
    throw DimensionError("change_of_basis_unitary: dimension mismatch");
  const std::size_t n = from.size();
  ComplexMatrix u(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      u(a, c) = hs_inner(from.element(a), to.element(c));
  return u;
}

ComplexMatrix isotropic_state(std::size_t d) {
  require_dim(d, "isotropic_state");
  ComplexMatrix rho(d * d, d * d);
  const double w = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      rho(i * d + i, j * d + j) = w;
  return rho;
}

ComplexMatrix swap_operator(std::size_t d) {
  require_dim(d, "swap_operator");
  ComplexMatrix v(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      v(b * d + a, a * d + b) = 1.0;
  return v;
}

} // namespace qopmat

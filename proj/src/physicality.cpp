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

#include "qopmat/physicality.hpp"

#include <cmath>

#include "qopmat/errors.hpp"

namespace qopmat {

namespace {

constexpr double kTraceTol = 1e-9;

ComplexMatrix symmetrize(const ComplexMatrix &a) {
  return 0.5 * (a + dagger(a));
}

ChiMatrix to_chi(const Channel &c) {
  if (const auto *chi = std::get_if<ChiMatrix>(&c))
    return *chi;
  if (const auto *s = std::get_if<SMatrix>(&c)) {
    std::vector<ConversionKit> kits;
    kits.reserve(s->basis.size());
    for (const auto &b : s->basis)
      kits.push_back(build_kit(b));
    return s_to_chi_n(*s, kits);
  }
  const auto &k = std::get<KrausChannel>(c);
  std::vector<OperatorBasis> basis(k.n, OperatorBasis::gellmann(k.d));
  return chi_from_kraus(k, std::move(basis));
}

} // namespace

PhysicalityReport check_physical(const ChiMatrix &chi) {
  PhysicalityReport report;
  report.hermiticity_deviation = hermiticity_deviation(chi.data);

  const ChiMatrix sym{chi.d, chi.n, chi.basis, symmetrize(chi.data)};
  const EigenDecomposition eig = eigh(sym.data);
  const double lambda_max = eig.eigenvalues.front();
  report.min_chi_eigenvalue = eig.eigenvalues.back();
  report.is_cp =
      report.min_chi_eigenvalue >= -1e-9 * std::max(lambda_max, 0.0) &&
      lambda_max >= 0.0;

  // Condition 4: partial-trace the Choi matrix over the output factors
  // (even positions of the interleaved ordering) and compare against the
  // identity on the mirror factors.
  const ComplexMatrix choi = choi_matrix(sym);
  std::vector<std::size_t> dims(2 * chi.n, chi.d);
  std::set<std::size_t> outputs;
  for (std::size_t k = 0; k < chi.n; ++k)
    outputs.insert(2 * k);
  const ComplexMatrix traced = partial_trace(choi, dims, outputs);
  const ComplexMatrix excess_op =
      traced - ComplexMatrix::identity(traced.rows());
  const EigenDecomposition excess = eigh(excess_op);
  report.trace_condition_excess = excess.eigenvalues.front();
  report.is_trace_nonincreasing = report.trace_condition_excess <= kTraceTol;
  report.is_trace_preserving =
      report.is_trace_nonincreasing && -excess.eigenvalues.back() <= kTraceTol;
  return report;
}

PhysicalityReport check_physical(const Channel &c) {
  return check_physical(to_chi(c));
}

double process_fidelity(const ChiMatrix &a, const ChiMatrix &b_ideal) {
  if (a.d != b_ideal.d || a.n != b_ideal.n)
    throw DimensionError("process_fidelity: channels disagree on d or n");
  const ChiMatrix b = change_basis(b_ideal, a.basis);

  const EigenDecomposition eig = eigh(symmetrize(b.data));
  const double lambda_max = eig.eigenvalues.front();
  const double second =
      eig.eigenvalues.size() > 1 ? std::abs(eig.eigenvalues[1]) : 0.0;
  if (lambda_max <= 0.0 || second > 1e-9 * lambda_max)
    throw ValidationError(
        "process_fidelity: ideal chi-matrix is not rank one (second "
        "eigenvalue " +
        std::to_string(second) + ")");

  const cplx product = trace(matmul(a.data, b.data));
  const double dim = static_cast<double>(a.data.rows()); // d^{2n}
  return product.real() / dim;
}

double channel_purity(const ChiMatrix &a) {
  double dn = 1.0;
  for (std::size_t k = 0; k < a.n; ++k)
    dn *= static_cast<double>(a.d);
  const ComplexMatrix normalized = (1.0 / dn) * a.data;
  return trace(matmul(normalized, normalized)).real();
}

} // namespace qopmat

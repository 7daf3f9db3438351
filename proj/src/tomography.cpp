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

#include "qopmat/tomography.hpp"

#include <cmath>
#include <random>

#include "qopmat/errors.hpp"

namespace qopmat {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

void require_supported(std::size_t n) {
  if (n != 1 && n != 2)
    throw ValidationError("tomography: only n = 1 and n = 2 are supported");
}

} // namespace

TomographyDataset simulate_dataset(const Channel &channel,
                                   const OperatorBasis &basis,
                                   double noise_sigma, std::uint64_t seed) {
  const std::size_t d = channel_d(channel);
  const std::size_t n = channel_n(channel);
  require_supported(n);
  if (basis.d() != d)
    throw DimensionError("simulate_dataset: basis dimension mismatch");
  if (!basis.is_hermitian())
    throw ValidationError(
        "simulate_dataset: readout requires a Hermitian operator basis");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
    throw ValidationError("simulate_dataset: noise_sigma must be >= 0");
  if (!check_physical(channel).is_cp)
    throw ValidationError(
        "simulate_dataset: channel is not completely positive");

  const ComplexMatrix choi = choi_matrix(channel);
  const std::size_t d2 = d * d;

  // Output factors carry the basis elements, mirror factors their
  // conjugates; the expectation values are exactly the transfer-matrix
  // entries read against the Choi state.
  std::vector<ComplexMatrix> conj_elems;
  conj_elems.reserve(d2);
  for (const auto &e : basis.elements())
    conj_elems.push_back(conjugate(e));

  TomographyDataset ds{d, n, noise_sigma, seed, {}};
  if (n == 1) {
    ds.values.reserve(d2 * d2);
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t b = 0; b < d2; ++b) {
        const ComplexMatrix obs = kron(basis.element(a), conj_elems[b]);
        ds.values.push_back(hs_inner(obs, choi).real());
      }
  } else {
    ds.values.reserve(d2 * d2 * d2 * d2);
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t g = 0; g < d2; ++g) {
        const ComplexMatrix left = kron(basis.element(a), conj_elems[g]);
        for (std::size_t b = 0; b < d2; ++b)
          for (std::size_t dl = 0; dl < d2; ++dl) {
            const ComplexMatrix obs =
                kron(left, kron(basis.element(b), conj_elems[dl]));
            ds.values.push_back(hs_inner(obs, choi).real());
          }
      }
  }

  if (noise_sigma > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, noise_sigma);
    for (double &v : ds.values)
      v += gauss(rng);
  }
  return ds;
}

TomographyDataset simulate_dataset(const Channel &channel, double noise_sigma,
                                   std::uint64_t seed) {
  return simulate_dataset(channel, OperatorBasis::gellmann(channel_d(channel)),
                          noise_sigma, seed);
}

TomographyResult reconstruct(const TomographyDataset &ds) {
  if (ds.d < 2)
    throw ValidationError("reconstruct: malformed dataset (d < 2)");
  require_supported(ds.n);
  const std::size_t d2 = ds.d * ds.d;
  if (ds.values.size() != ipow(d2, 2 * ds.n))
    throw ValidationError("reconstruct: malformed dataset (expected " +
                          std::to_string(ipow(d2, 2 * ds.n)) + " values, got " +
                          std::to_string(ds.values.size()) + ")");
  for (double v : ds.values)
    if (!std::isfinite(v))
      throw ValidationError("reconstruct: malformed dataset (non-finite value)");

  const OperatorBasis gm = OperatorBasis::gellmann(ds.d);
  std::vector<OperatorBasis> bases(ds.n, gm);

  ComplexMatrix data(ipow(d2, ds.n), ipow(d2, ds.n));
  if (ds.n == 1) {
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t b = 0; b < d2; ++b)
        data(a, b) = ds.values[a * d2 + b];
  } else {
    // Values are lexicographic in (alpha, gamma, beta, delta); the
    // transfer matrix packs rows as [alpha, beta] and columns as
    // [gamma, delta].
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t g = 0; g < d2; ++g)
        for (std::size_t b = 0; b < d2; ++b)
          for (std::size_t dl = 0; dl < d2; ++dl)
            data(a * d2 + b, g * d2 + dl) =
                ds.values[((a * d2 + g) * d2 + b) * d2 + dl];
  }

  TomographyResult result{
      SMatrix{ds.d, ds.n, bases, std::move(data)}, ChiMatrix{}, {}};
  const ConversionKit kit = build_kit(gm);
  result.chi = (ds.n == 1) ? s_to_chi(result.smatrix, kit)
                           : s_to_chi_2(result.smatrix, kit, kit);
  result.report = check_physical(result.chi);
  return result;
}

} // namespace qopmat

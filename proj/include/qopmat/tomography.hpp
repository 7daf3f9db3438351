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

#ifndef QOPMAT_TOMOGRAPHY_HPP_
#define QOPMAT_TOMOGRAPHY_HPP_

#include <cstdint>

#include "qopmat/channel.hpp"
#include "qopmat/physicality.hpp"

namespace qopmat {

/// Expectation values of the Hermitian product-basis observables on the
/// normalized Choi state, scaled to the transfer-matrix entries. Index
/// order: alpha-major then beta for n = 1 (d^4 values); lexicographic
/// (alpha, gamma, beta, delta) for n = 2 (d^8 values).
struct TomographyDataset {
  std::size_t d = 0;
  std::size_t n = 1;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> values;
};

struct TomographyResult {
  SMatrix smatrix;
  ChiMatrix chi;
  PhysicalityReport report;
};

/// Simulates entanglement-assisted identification of a CP channel:
/// noiselessly the values equal the S-matrix entries in the Hermitian
/// basis; Gaussian noise of standard deviation noise_sigma is added from
/// a deterministic stream seeded by `seed`. The basis must be Hermitian
/// and the channel completely positive.
TomographyDataset simulate_dataset(const Channel &channel,
                                   const OperatorBasis &basis,
                                   double noise_sigma, std::uint64_t seed);

/// Convenience overload over the Gell-Mann basis (the dataset file format
/// carries no basis; reconstruction always pairs with Gell-Mann).
TomographyDataset simulate_dataset(const Channel &channel, double noise_sigma,
                                   std::uint64_t seed);

/// Linear readout: reassembles the S-matrix from the dataset, converts to
/// the chi-matrix through the conversion kit, and attaches a physicality
/// report (noise may leave chi slightly non-positive; that is reported,
/// never repaired).
TomographyResult reconstruct(const TomographyDataset &ds);

} // namespace qopmat

#endif // QOPMAT_TOMOGRAPHY_HPP_

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

#ifndef QOPMAT_PHYSICALITY_HPP_
#define QOPMAT_PHYSICALITY_HPP_

#include "qopmat/channel.hpp"

namespace qopmat {

/// Diagnostics for the physicality of a represented map. Complete
/// positivity is decided through the eigenvalues of the chi-matrix; the
/// trace condition through the partial trace of the Choi matrix over the
/// output factors, which reproduces sum K^dag K <= I.
struct PhysicalityReport {
  double hermiticity_deviation = 0.0;  ///< max |chi - chi^dag|
  double min_chi_eigenvalue = 0.0;
  double trace_condition_excess = 0.0; ///< max eigenvalue of Tr_out(Choi) - I
  bool is_cp = false;
  bool is_trace_nonincreasing = false;
  bool is_trace_preserving = false;
};

PhysicalityReport check_physical(const ChiMatrix &chi);
PhysicalityReport check_physical(const Channel &c);

/// Process fidelity F_p = Tr(chi_a chi_ideal) / d^{2n}. The second
/// argument must be rank one within 1e-9 (relative); bases are aligned
/// automatically when they differ.
double process_fidelity(const ChiMatrix &a, const ChiMatrix &b_ideal);

/// Tr[(chi / d^n)^2]; equals 1 exactly for unitary (rank-one chi)
/// channels and decreases with mixing.
double channel_purity(const ChiMatrix &a);

} // namespace qopmat

#endif // QOPMAT_PHYSICALITY_HPP_

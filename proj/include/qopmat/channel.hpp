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

#ifndef QOPMAT_CHANNEL_HPP_
#define QOPMAT_CHANNEL_HPP_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qopmat/basis.hpp"
#include "qopmat/linalg.hpp"

namespace qopmat {

//=========================================================================
// Channel representations
//
// Index conventions, used throughout:
//  * per-qudit basis indices pack as [a, b] := d^2*a + b;
//  * the matrix of a superoperator acting on vectorized operators carries
//    the row-major vec ordering (r_1..r_n, c_1..c_n);
//  * Choi matrices carry the interleaved (output, mirror) pair-major
//    ordering (r_1, c_1, ..., r_n, c_n), one pair per qudit.
//=========================================================================

/// One-sided (transfer) form: the channel as a matrix on Liouville space,
/// with entries taken against the dyadic products of the per-qudit basis
/// supervectors. Composition of channels is multiplication of these.
struct SMatrix {
  std::size_t d = 0;
  std::size_t n = 1;
  std::vector<OperatorBasis> basis; ///< one per qudit
  ComplexMatrix data;               ///< d^{2n} x d^{2n}
};

/// Two-sided (process) form: coefficients of the channel's expansion
/// S(rho) = sum chi_ab E_a rho E_b^dag over the per-qudit basis elements.
/// Positive semidefinite iff the channel is completely positive.
struct ChiMatrix {
  std::size_t d = 0;
  std::size_t n = 1;
  std::vector<OperatorBasis> basis;
  ComplexMatrix data;
};

/// Operator-sum form: S(rho) = sum_i K_i rho K_i^dag.
struct KrausChannel {
  std::size_t d = 0;
  std::size_t n = 1;
  std::vector<ComplexMatrix> operators; ///< each d^n x d^n
};

/// A channel in any of the three interconvertible forms.
using Channel = std::variant<ChiMatrix, SMatrix, KrausChannel>;

std::size_t channel_d(const Channel &c);
std::size_t channel_n(const Channel &c);

SMatrix make_smatrix(std::vector<OperatorBasis> basis, ComplexMatrix data);
ChiMatrix make_chi(std::vector<OperatorBasis> basis, ComplexMatrix data);
KrausChannel make_kraus(std::size_t d, std::size_t n,
                        std::vector<ComplexMatrix> operators);

//=========================================================================
// Conversion kit
//=========================================================================

/// The precomputed Q^g and R^g coefficient matrices that drive the
/// chi <-> S conversion for one basis: Q^g_ab = <<E_a|(I (x) pi_g)|E_b>>
/// and R^g_ab = <<E_a|(pi_g (x) I)|E_b>>, with pi_g the transition
/// operators. The induced d^4 x d^4 matrix M is Hermitian and unitary,
/// which is verified at construction.
struct ConversionKit {
  std::size_t d = 0;
  OperatorBasis basis;
  std::vector<ComplexMatrix> Q; ///< d^2 matrices, each d^2 x d^2
  std::vector<ComplexMatrix> R;
};

/// Builds (and memoizes, for canonical kinds) the kit for a basis.
ConversionKit build_kit(const OperatorBasis &basis);

/// Kits for a two-qudit operation: (Q, R) over basisE and the analogous
/// (S, T) pair over basisF. S^l == Q^l when the bases coincide.
std::pair<ConversionKit, ConversionKit>
build_two_qudit_kit(const OperatorBasis &basisE, const OperatorBasis &basisF);

/// The d^4 x d^4 matrix M[(a',b'),(a,b)] = sum_g Q^g_{a'a} R^g_{b b'};
/// exposed for verification.
ComplexMatrix kit_m_matrix(const ConversionKit &kit);

//=========================================================================
// chi <-> S conversions
//=========================================================================

/// Single-qudit conversion S = sum_g Q^g chi R^g.
SMatrix chi_to_s(const ChiMatrix &chi, const ConversionKit &kit);

/// Single-qudit conversion chi = sum_g Q^g S R^g (same kernel; M^2 = I).
ChiMatrix s_to_chi(const SMatrix &s, const ConversionKit &kit);

/// Two-qudit conversions, sum over (g, l) of the Kronecker-paired kits.
SMatrix chi_to_s_2(const ChiMatrix &chi, const ConversionKit &kitE,
                   const ConversionKit &kitF);
ChiMatrix s_to_chi_2(const SMatrix &s, const ConversionKit &kitE,
                     const ConversionKit &kitF);

/// n-qudit conversions with one kit per qudit; subject to the matrix
/// size guard (see size_cap()).
SMatrix chi_to_s_n(const ChiMatrix &chi, const std::vector<ConversionKit> &kits);
ChiMatrix s_to_chi_n(const SMatrix &s, const std::vector<ConversionKit> &kits);

//=========================================================================
// Superoperator / Choi matrices and Kraus extraction
//=========================================================================

/// The d^{2n} x d^{2n} matrix L with vec(S(rho)) = L vec(rho).
ComplexMatrix superop_matrix(const KrausChannel &k);
ComplexMatrix superop_matrix(const ChiMatrix &chi);
ComplexMatrix superop_matrix(const SMatrix &s);
ComplexMatrix superop_matrix(const Channel &c);

/// The Choi operator's matrix in the interleaved product state basis
/// (for n = 1 the d^2 x d^2 matrix of the channel applied to half of the
/// unnormalized maximally entangled state).
ComplexMatrix choi_matrix(const ChiMatrix &chi);
ComplexMatrix choi_matrix(const KrausChannel &k);
ComplexMatrix choi_matrix(const SMatrix &s);
ComplexMatrix choi_matrix(const Channel &c);

/// Applies the channel to a d^n x d^n operator.
ComplexMatrix apply_channel(const Channel &c, const ComplexMatrix &rho);
ComplexMatrix apply_kraus(const KrausChannel &k, const ComplexMatrix &rho);

/// Canonical Kraus operators from the eigendecomposition of chi:
/// K_m = sqrt(lambda_m) sum_a V_{a m} E_a, eigenvalues below
/// 1e-12 * lambda_max dropped. Throws NotCompletelyPositiveError when the
/// smallest eigenvalue is below -1e-9 * lambda_max.
KrausChannel kraus_from_chi(const ChiMatrix &chi);

/// chi_ab = sum_i c_i[a] conj(c_i[b]) with K_i = sum_a c_i[a] E_a;
/// positive semidefinite by construction.
ChiMatrix chi_from_kraus(const KrausChannel &k,
                         std::vector<OperatorBasis> basis);

//=========================================================================
// Basis changes
//=========================================================================

ChiMatrix change_basis(const ChiMatrix &chi, std::vector<OperatorBasis> to);
SMatrix change_basis(const SMatrix &s, std::vector<OperatorBasis> to);

//=========================================================================
// Stock channels and gates
//=========================================================================

KrausChannel identity_channel(std::size_t d, std::size_t n = 1);
KrausChannel unitary_channel(const ComplexMatrix &u, std::size_t d,
                             std::size_t n = 1);
/// Kraus set { E_a / sqrt(d) } over the transition basis.
KrausChannel depolarizing_channel(std::size_t d);

namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix phase_s();
ComplexMatrix cnot();
ComplexMatrix swap2();
} // namespace gates

//=========================================================================
// Helpers shared across modules
//=========================================================================

/// Matrix-dimension guard; default 4096, overridable through the
/// QOPMAT_SIZE_CAP environment variable.
std::size_t size_cap();

/// Columns are the interleaved-ordering coordinates of the product basis
/// supervectors |E_{a_1}>> (x) ... (x) |E_{a_n}>> (Kronecker product of
/// the per-qudit vectorized elements).
ComplexMatrix product_basis_frame(const std::vector<OperatorBasis> &basis);

/// The product-basis element (x)_k E^{(k)}_{a_k} for packed index `packed`.
ComplexMatrix product_basis_element(const std::vector<OperatorBasis> &basis,
                                    std::size_t packed);

/// Permutation matrix conjugation taking vec ordering
/// (r_1..r_n, c_1..c_n) to interleaved ordering (r_1, c_1, ..., r_n, c_n).
ComplexMatrix vec_to_interleaved(const ComplexMatrix &m, std::size_t d,
                                 std::size_t n);
ComplexMatrix interleaved_to_vec(const ComplexMatrix &m, std::size_t d,
                                 std::size_t n);

} // namespace qopmat

#endif // QOPMAT_CHANNEL_HPP_

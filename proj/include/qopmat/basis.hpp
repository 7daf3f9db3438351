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

#ifndef QOPMAT_BASIS_HPP_
#define QOPMAT_BASIS_HPP_

#include <string>
#include <vector>

#include "qopmat/linalg.hpp"

namespace qopmat {

enum class BasisKind { transition, weyl, gellmann, custom };

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string &s);

/// An ordered set of d^2 operators on a d-dimensional space, orthonormal
/// and complete under the Hilbert-Schmidt inner product.
class OperatorBasis {
public:
  /// Transition operators |i><j|, ordered by the index rule d*i + j.
  static OperatorBasis transition(std::size_t d);

  /// Discrete displacement (Weyl) operators, ordered by d*m + n. Each
  /// element is (1/sqrt(d)) times a unitary; the half-integer phase is
  /// fixed to the principal branch exp(i*pi*m*n/d).
  static OperatorBasis weyl(std::size_t d);

  /// Normalized identity followed by the traceless Hermitian SU(d)
  /// generators: all u_{i,j}, then all v_{i,j} (lexicographic in (i,j),
  /// 0 <= i < j <= d-1), then the diagonal w_1..w_{d-1}.
  static OperatorBasis gellmann(std::size_t d);

  /// User-supplied elements; validated (orthonormality + completeness)
  /// before a usable basis is returned. Throws ValidationError otherwise.
  static OperatorBasis custom(std::size_t d, std::vector<ComplexMatrix> elements);

  std::size_t d() const { return d_; }
  BasisKind kind() const { return kind_; }
  const std::vector<ComplexMatrix> &elements() const { return elements_; }
  const ComplexMatrix &element(std::size_t alpha) const {
    return elements_[alpha];
  }
  std::size_t size() const { return elements_.size(); }

  /// True when every element is Hermitian within tol.
  bool is_hermitian(double tol = 1e-10) const;

private:
  OperatorBasis(std::size_t d, BasisKind kind,
                std::vector<ComplexMatrix> elements)
      : d_(d), kind_(kind), elements_(std::move(elements)) {}

  std::size_t d_;
  BasisKind kind_;
  std::vector<ComplexMatrix> elements_;
};

/// True when the two bases have the same dimension and identical elements
/// (within 1e-12 max-abs per entry).
bool same_basis(const OperatorBasis &a, const OperatorBasis &b);

//=========================================================================
// Validation
//=========================================================================

/// Deviations measured by validate_basis; a basis passes when every
/// deviation is below 1e-10.
struct BasisReport {
  double orthonormality_deviation = 0.0; ///< max |Tr E_a^dag E_b - delta_ab|
  double completeness_deviation = 0.0;   ///< exhaustive four-index identity
  double reconstruction_deviation = 0.0; ///< A = sum (Tr E^dag A) E, random A
  double depolarizing_deviation = 0.0;   ///< (1/d) sum E A E^dag = Tr A/d * I
  bool passed = false;
};

/// Checks orthonormality exhaustively, completeness exhaustively, and the
/// reconstruction/depolarizing identities on a fixed deterministic set of
/// random operators.
BasisReport validate_basis(const OperatorBasis &b);

/// Same checks over raw candidate elements, before any basis exists;
/// lets callers inspect the failure report that OperatorBasis::custom
/// turns into an error.
BasisReport validate_elements(std::size_t d,
                              const std::vector<ComplexMatrix> &elements);

//=========================================================================
// Basis relations and distinguished bipartite operators
//=========================================================================

/// The d^2 x d^2 unitary U with U_ab = Tr E_a^dag F_b relating two bases
/// of the same dimension: F_b = sum_a E_a U_ab.
ComplexMatrix change_of_basis_unitary(const OperatorBasis &from,
                                      const OperatorBasis &to);

/// Isotropic state rho_I = (1/d) |I>><<I| on the doubled space.
ComplexMatrix isotropic_state(std::size_t d);

/// Swap operator V(|a> (x) |b>) = |b> (x) |a| on the doubled space.
ComplexMatrix swap_operator(std::size_t d);

} // namespace qopmat

#endif // QOPMAT_BASIS_HPP_

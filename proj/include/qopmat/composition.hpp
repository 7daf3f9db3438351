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

#ifndef QOPMAT_COMPOSITION_HPP_
#define QOPMAT_COMPOSITION_HPP_

#include <functional>
#include <string>

#include "qopmat/channel.hpp"

namespace qopmat {

/// A circuit over an n-qudit register. Steps are temporal: the first
/// listed step is applied first; the resulting transfer matrix is the
/// product with later steps multiplied on the left.
struct CircuitStep {
  std::string channel; ///< path-or-name reference, resolved by the caller
  std::vector<std::string> targets; ///< wire names, channel-qudit order
};

struct CircuitSpec {
  std::size_t d = 2;
  std::vector<std::string> wires;
  std::vector<CircuitStep> steps;
};

/// s1 applied after s2: the matrix product s1 * s2.
SMatrix compose(const SMatrix &s1, const SMatrix &s2);

/// Tensor-rearranged product of chi-matrices: the chi of the product
/// channel A (x) B over the concatenated per-qudit bases.
ChiMatrix chi_tensor(const ChiMatrix &a, const ChiMatrix &b);

/// Extends a channel on |targets| qudits to an S-matrix over an n-wire
/// register: the chi picks up identity-operation factors on the untouched
/// wires, qudit slots are permuted so targets land on the requested wires
/// (an explicit index bijection), and the result converts to S form.
/// Every wire uses register_basis. Subject to the size cap.
SMatrix lift(const Channel &c, const std::vector<std::size_t> &targets,
             std::size_t n_register, const OperatorBasis &register_basis);

/// Resolves a step's channel reference to a Channel.
using ChannelResolver = std::function<Channel(const std::string &)>;

/// Ordered product of the lifted step S-matrices over the register.
SMatrix run_circuit(const CircuitSpec &spec, const ChannelResolver &resolve,
                    const OperatorBasis &register_basis);

} // namespace qopmat

#endif // QOPMAT_COMPOSITION_HPP_

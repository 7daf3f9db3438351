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

#ifndef QOPMAT_IO_HPP_
#define QOPMAT_IO_HPP_

#include <string>

#include <json.hpp>

#include "qopmat/channel.hpp"
#include "qopmat/composition.hpp"
#include "qopmat/physicality.hpp"
#include "qopmat/tomography.hpp"

namespace qopmat {

/// All files are canonical JSON: keys sorted, complex numbers as [re, im]
/// pairs, floats in shortest-roundtrip decimal form; byte-for-byte stable
/// for equal inputs. Channel files carry the "qopmat-v1" format tag and
/// readers reject anything else.

nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j, std::size_t rows,
                               std::size_t cols);

nlohmann::json basis_to_json(const OperatorBasis &b);
OperatorBasis basis_from_json(const nlohmann::json &j);

nlohmann::json channel_to_json(const Channel &c);
Channel channel_from_json(const nlohmann::json &j);

nlohmann::json circuit_to_json(const CircuitSpec &c);
CircuitSpec circuit_from_json(const nlohmann::json &j);

nlohmann::json dataset_to_json(const TomographyDataset &ds);
TomographyDataset dataset_from_json(const nlohmann::json &j);

nlohmann::json report_to_json(const PhysicalityReport &r);

/// Canonical text form (sorted keys, two-space indent, trailing newline).
std::string canonical_dump(const nlohmann::json &j);

/// File helpers; parse failures raise ParseError, filesystem failures
/// IoError.
nlohmann::json load_json(const std::string &path);
void save_json(const std::string &path, const nlohmann::json &j);

Channel load_channel(const std::string &path);
void save_channel(const std::string &path, const Channel &c);
OperatorBasis load_basis(const std::string &path);
void save_basis(const std::string &path, const OperatorBasis &b);
CircuitSpec load_circuit(const std::string &path);
TomographyDataset load_dataset(const std::string &path);
void save_dataset(const std::string &path, const TomographyDataset &ds);

} // namespace qopmat

#endif // QOPMAT_IO_HPP_

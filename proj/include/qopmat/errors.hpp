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

#ifndef QOPMAT_ERRORS_HPP_
#define QOPMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qopmat {

/// Base class for all qopmat failures.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Incompatible shapes, qudit counts, or basis mismatches.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Input failed a numerical validity requirement (orthonormality,
/// Hermiticity, rank, size cap, malformed dataset, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A matrix expected to be Hermitian deviated beyond tolerance.
class NotHermitianError : public ValidationError {
public:
  NotHermitianError(const std::string &msg, double deviation)
      : ValidationError(msg), deviation_(deviation) {}
  double deviation() const { return deviation_; }

private:
  double deviation_;
};

/// A chi-matrix had a negative eigenvalue beyond tolerance; the
/// represented map is not completely positive.
class NotCompletelyPositiveError : public ValidationError {
public:
  NotCompletelyPositiveError(const std::string &msg, double min_eigenvalue)
      : ValidationError(msg), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

private:
  double min_eigenvalue_;
};

/// File contents could not be parsed or violated the file schema.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace qopmat

#endif // QOPMAT_ERRORS_HPP_

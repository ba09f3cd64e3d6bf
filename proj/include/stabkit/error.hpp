// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABKIT_ERROR_HPP
#define STABKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabkit {

/// Base class for all stabkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Carries a 1-based line (or column) number
/// when one is known; 0 means "no location".
struct ParseError : Error {
    size_t line;
    ParseError(size_t line_number, const std::string &what)
        : Error(line_number ? "line " + std::to_string(line_number) + ": " + what : what),
          line(line_number) {}
};

/// Operands have incompatible sizes (e.g. Pauli strings of different length).
struct DimensionError : Error {
    using Error::Error;
};

/// A gate or construct exists but is not supported on this code path.
struct UnsupportedError : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace stabkit

#endif

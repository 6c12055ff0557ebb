/*
 * Copyright 2026 The ulrc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ULRC_ERRORS_HPP
#define ULRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulrc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text, JSON, or files.
struct ParseError : Error {
    using Error::Error;
};

/// Parameter or contract violations (bad dimensions, mixed towers, ...).
struct ConstraintError : Error {
    using Error::Error;
};

/// An erasure pattern that cannot be decoded (remaining rank below k).
struct DataLossError : Error {
    using Error::Error;
};

/// Local repair is not possible within the group.
struct RepairError : Error {
    using Error::Error;
};

/// A desk-scale enumeration cap was exceeded.
struct CapError : Error {
    using Error::Error;
};

}  // namespace ulrc

#endif

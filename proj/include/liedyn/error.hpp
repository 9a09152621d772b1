// Copyright 2026 The liedyn Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace liedyn {

/// Base class of every error raised by the liedyn core.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in incompatible scalar rings (e.g. Q(z3) and Q(z4)).
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Operands belong to different function spaces.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed: element outside the image of tau,
/// infinite backend where a finite one is required, bad level, etc.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed command-line arguments or unknown suite names.
class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace liedyn

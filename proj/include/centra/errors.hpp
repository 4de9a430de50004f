/**************************************************************************
 * include/centra/errors.hpp
 *
 * Copyright 2026 The centra Authors
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
 **************************************************************************/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace centra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, bad cycle notation, bad parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An enumeration or orbit computation would exceed its configured cap.
/// `required` is the size that was needed (group order, orbit length, vector
/// count), saturated to 2^64 - 1 when it does not fit.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
        : Error(what + " (needs " + std::to_string(required) + ", cap " + std::to_string(cap) + ")"),
          required_(required), cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

} // namespace centra

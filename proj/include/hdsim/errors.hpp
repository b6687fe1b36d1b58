/*
 * Copyright 2026 The hdsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hdsim {

/// Malformed text input (automaton, game or formula files, CLI values).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A well-formed value that violates an invariant or operation precondition.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource bound (strategy enumeration size, colour count) was exceeded.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hdsim

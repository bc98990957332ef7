/*
   Copyright 2026 The curvefam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace curvefam {

/// Base class for all library errors.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (polynomials, JSON job files).
class parse_error : public error {
  public:
    explicit parse_error(const std::string& what) : error(what) {}
};

/// The computation would need algebra beyond Q and one quadratic extension.
class unsupported_field_error : public error {
  public:
    explicit unsupported_field_error(const std::string& what) : error(what) {}
};

/// A lattice class was handed to an operation that only supports the
/// documented class shapes.
class unsupported_class_error : public error {
  public:
    explicit unsupported_class_error(const std::string& what) : error(what) {}
};

/// Basepoint recursion exceeded the configured depth cap.
class depth_cap_error : public error {
  public:
    explicit depth_cap_error(const std::string& what) : error(what) {}
};

} // namespace curvefam

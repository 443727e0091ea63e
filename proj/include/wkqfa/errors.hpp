// Copyright 2026 The wkqfa authors
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

#pragma once

#include <stdexcept>

namespace wkqfa {

// A symbol or word lies outside the alphabet an operation was given.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration guard or work budget would be exceeded.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Machine, tape or relation data violates a construction invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operator table or matrix has a malformed shape.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A run encountered machine data it cannot interpret.
struct ConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructive machine translation could not be carried out.
struct EmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wkqfa

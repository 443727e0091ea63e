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

#include <complex>
#include <cstddef>
#include <vector>

namespace wkqfa {

using Amplitude = std::complex<double>;

// Small dense complex matrix, row-major. Entry (r, c) is the amplitude for
// going from basis state c to basis state r, i.e. <r|U|c>.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix zero(size_t n) { return ComplexMatrix(n, n); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Amplitude& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Amplitude& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

    // Largest absolute entry of (this - I); requires a square matrix.
    double max_deviation_from_identity() const;

    bool operator==(const ComplexMatrix& other) const = default;

   private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Amplitude> data_;
};

}  // namespace wkqfa

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

#include "wkqfa/complex_matrix.hpp"

#include <cassert>
#include <cmath>

namespace wkqfa {

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    ComplexMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t k = 0; k < cols_; ++k) {
            const Amplitude v = at(r, k);
            if (v == Amplitude{}) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

double ComplexMatrix::max_deviation_from_identity() const {
    assert(square());
    double worst = 0.0;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            const Amplitude expected = (r == c) ? Amplitude{1.0} : Amplitude{};
            worst = std::max(worst, std::abs(at(r, c) - expected));
        }
    }
    return worst;
}

}  // namespace wkqfa

// Copyright 2026 The chainbell Authors
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

#include "chainbell/rng.h"

#include <cmath>
#include <numbers>

namespace chainbell {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

CMat random_hermitian(Rng &rng, size_t dim) {
    CMat m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            double re = rng.normal();
            double im = rng.normal();
            m(i, j) = {re, im};
        }
    }
    return hermitian_part(m);
}

CMat random_dichotomic(Rng &rng, size_t dim) {
    return herm_sign(random_hermitian(rng, dim));
}

CMat random_balanced_dichotomic(Rng &rng, size_t dim) {
    auto eig = hermitian_eig(random_hermitian(rng, dim));
    CMat out(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        double sign = k < dim - dim / 2 ? 1.0 : -1.0;
        out = out + cplx{sign, 0} * outer(eig[k].vector, eig[k].vector);
    }
    return hermitian_part(out);
}

CVec random_state(Rng &rng, size_t dim) {
    CVec v(dim);
    for (size_t k = 0; k < dim; k++) {
        double re = rng.normal();
        double im = rng.normal();
        v[k] = {re, im};
    }
    return normalized(v);
}

}  // namespace chainbell

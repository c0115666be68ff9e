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

#ifndef CHAINBELL_RNG_H
#define CHAINBELL_RNG_H

#include <cstdint>
#include <random>

#include "chainbell/qmath.h"

namespace chainbell {

/// 64-bit Mersenne Twister with a fixed, platform-independent normal
/// transform (std::normal_distribution is implementation-defined).
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// Hermitian matrix from i.i.d. standard normal real and imaginary parts.
CMat random_hermitian(Rng &rng, size_t dim);
/// herm_sign of random_hermitian.
CMat random_dichotomic(Rng &rng, size_t dim);
/// Dichotomic observable with floor(dim/2) eigenvalues -1 and the rest +1,
/// eigenbasis taken from random_hermitian. Never proportional to I for dim >= 2.
CMat random_balanced_dichotomic(Rng &rng, size_t dim);
/// Normalized Gaussian random vector.
CVec random_state(Rng &rng, size_t dim);

}  // namespace chainbell

#endif

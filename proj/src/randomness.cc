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

#include "chainbell/randomness.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chainbell {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

double outcome_probability(const Realization &r, int i, int j, int a, int b) {
    require((a == 1 || a == -1) && (b == 1 || b == -1), "outcome labels must be +1 or -1");
    const size_t d = r.dim();
    CMat pa = 0.5 * (CMat::identity(d) + static_cast<double>(a) * r.A(i));
    CMat pb = 0.5 * (CMat::identity(d) + static_cast<double>(b) * r.B(j));
    return expect_joint(r, pa, pb);
}

double randomness_bits(const Realization &r, int i, int j) {
    double best = 0;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            best = std::max(best, outcome_probability(r, i, j, a, b));
        }
    }
    if (!(best > 0)) {
        throw NumericError("randomness_bits: no positive outcome probability");
    }
    return std::min(2.0, std::max(0.0, -std::log2(std::min(best, 1.0))));
}

double r_min_closed(int n) {
    require(n >= 2, "n must be >= 2");
    return std::log2(4.0 / (1.0 + std::cos(kPi / (2.0 * n))));
}

double r_max_closed(int n) {
    require(n >= 3 && n % 2 == 1, "r_max_closed needs odd n >= 3");
    return 2.0;
}

NoisyRandomness noisy_randomness(int n, double eps) {
    require(n >= 2, "n must be >= 2");
    require(eps >= 0, "epsilon must be non-negative");
    double s = std::sqrt(1.0 + eps * eps);
    NoisyRandomness out{};
    out.r_min = std::log2(4.0 * s / (s + eps + std::cos(kPi / (2.0 * n))));
    if (n % 2 == 1) {
        out.r_max = std::log2(4.0 * s / (s + eps));
    }
    return out;
}

RandomnessReport randomness_report(const Realization &r) {
    const int n = r.n();
    RandomnessReport rep{};
    rep.n = n;
    rep.per_pair_bits.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    rep.r_max = -1;
    for (int i = 1; i <= n; i++) {
        for (int j = 1; j <= n; j++) {
            double bits = randomness_bits(r, i, j);
            rep.per_pair_bits[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = bits;
            if (bits > rep.r_max) {
                rep.r_max = bits;
                rep.max_pair = {i, j};
            }
        }
    }
    for (int i = 1; i <= n; i++) {
        for (int j = 1; j <= n; j++) {
            if (rep.per_pair_bits[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] >= rep.r_max - 1e-12) {
                rep.max_pairs.emplace_back(i, j);
            }
        }
    }
    rep.r_min = 3;
    for (int i = 1; i <= n; i++) {
        for (int j : {i, i == 1 ? n : i - 1}) {
            double bits = rep.per_pair_bits[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (bits < rep.r_min) {
                rep.r_min = bits;
                rep.min_pair = {i, j};
            }
        }
    }
    return rep;
}

RandomnessReport empirical_randomness(const Realization &r, const NoiseModel &nm) {
    require(nm.epsilon >= 0, "epsilon must be non-negative");
    require(nm.normalized || nm.epsilon == 0, "empirical randomness uses the normalized noise model");
    RandomnessReport rep = randomness_report(noisy_bob(r, nm));
    rep.epsilon = nm.epsilon;
    return rep;
}

}  // namespace chainbell

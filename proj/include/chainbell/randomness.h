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

#ifndef CHAINBELL_RANDOMNESS_H
#define CHAINBELL_RANDOMNESS_H

#include <optional>
#include <utility>
#include <vector>

#include "chainbell/robust.h"
#include "chainbell/scenario.h"

namespace chainbell {

/// P(a, b | A_i, B_j) = <psi| (I + a A_i)/2 (x) (I + b B_j)/2 |psi>, a, b = +-1.
double outcome_probability(const Realization &r, int i, int j, int a, int b);

/// -log2 max_{a,b} P(a, b | A_i, B_j).
double randomness_bits(const Realization &r, int i, int j);

/// log2(4 / (1 + cos(pi/(2n)))).
double r_min_closed(int n);
/// 2 bits; odd n only.
double r_max_closed(int n);

struct NoisyRandomness {
    double r_min;
    /// Absent for even n, where no pair has vanishing correlation.
    std::optional<double> r_max;
};

/// Closed forms under B~ = (B + eps I)/sqrt(1 + eps^2):
/// r_min = log2(4 s / (s + eps + cos(pi/(2n)))), r_max = log2(4 s / (s + eps)),
/// s = sqrt(1 + eps^2).
NoisyRandomness noisy_randomness(int n, double eps);

struct RandomnessReport {
    int n;
    /// per_pair_bits[i-1][j-1] = randomness_bits(r, i, j).
    std::vector<std::vector<double>> per_pair_bits;
    /// Minimum over the Bell-functional pairs (A_i, B_i) and (A_i, B_{i-1}),
    /// with (A_1, B_n) closing the chain.
    double r_min;
    std::pair<int, int> min_pair;
    double r_max;
    std::pair<int, int> max_pair;
    /// Every pair within 1e-12 of r_max.
    std::vector<std::pair<int, int>> max_pairs;
    double epsilon;
};

RandomnessReport randomness_report(const Realization &r);

/// Report on the realization with Bob's observables replaced by their
/// normalized noisy versions. Rejects the unnormalized model for eps > 0.
RandomnessReport empirical_randomness(const Realization &r, const NoiseModel &nm);

}  // namespace chainbell

#endif

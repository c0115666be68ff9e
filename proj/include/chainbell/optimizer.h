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

#ifndef CHAINBELL_OPTIMIZER_H
#define CHAINBELL_OPTIMIZER_H

#include <cstdint>
#include <vector>

#include "chainbell/scenario.h"

namespace chainbell {

struct SeesawConfig {
    int dim = 2;
    /// 0 selects default_restarts(n).
    int restarts = 0;
    int max_iters = 5000;
    double tol = 1e-10;
    uint64_t seed = 1;
};

/// 16 for n <= 7, 32 otherwise.
int default_restarts(int n);

struct SeesawResult {
    double best_value;
    Realization realization;
    /// iterations[k] holds the Bell value after the initial state step and
    /// after every subsequent round of restart k.
    std::vector<std::vector<double>> iterations;
    std::vector<bool> restart_converged;
    int best_restart;
    /// Whether the restart that produced best_value met the tolerance.
    bool converged;
};

/// Top eigenvector of the Bell operator (lowest eigensolver index on ties).
CVec optimize_state(const std::vector<Observable> &alice, const std::vector<Observable> &bob);

/// A_i = herm_sign(Tr_B[(I (x) K_i) rho]) with K_i = B_i + B_{i-1}, B_0 = -B_n.
std::vector<Observable> best_response_alice(const CVec &state, const std::vector<Observable> &bob);

/// B_i = herm_sign(Tr_A[(K_i (x) I) rho]) with K_i = A_i + A_{i+1}, A_{n+1} = -A_1.
std::vector<Observable> best_response_bob(const CVec &state, const std::vector<Observable> &alice);

/// Multi-start see-saw over dichotomic observables on C^dim (x) C^dim.
/// Restart k draws its initial observables from Rng(cfg.seed + k).
SeesawResult seesaw(int n, const SeesawConfig &cfg);

}  // namespace chainbell

#endif

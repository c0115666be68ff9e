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

#include "chainbell/optimizer.h"

#include <stdexcept>

#include "chainbell/rng.h"

namespace chainbell {

namespace {

std::vector<CMat> matrices(const std::vector<Observable> &obs) {
    std::vector<CMat> out;
    out.reserve(obs.size());
    for (const auto &o : obs) {
        out.push_back(o.matrix());
    }
    return out;
}

size_t local_dim(const CVec &state, const std::vector<Observable> &obs) {
    if (obs.empty()) {
        throw std::invalid_argument("need at least one observable");
    }
    size_t d = obs[0].matrix().rows();
    if (state.dim() != d * d) {
        throw std::invalid_argument("state dimension does not match observables");
    }
    return d;
}

// Tr_B[(I (x) K) |psi><psi|] from the reshaped amplitudes.
CMat effective_alice(const CVec &psi, const CMat &k, size_t d) {
    CVec phi = op_apply(lift_bob(k, d), psi);
    CMat w(d, d);
    for (size_t a = 0; a < d; a++) {
        for (size_t a2 = 0; a2 < d; a2++) {
            cplx s = 0;
            for (size_t b = 0; b < d; b++) {
                s += phi[a * d + b] * std::conj(psi[a2 * d + b]);
            }
            w(a, a2) = s;
        }
    }
    return hermitian_part(w);
}

// Tr_A[(K (x) I) |psi><psi|].
CMat effective_bob(const CVec &psi, const CMat &k, size_t d) {
    CVec phi = op_apply(lift_alice(k, d), psi);
    CMat w(d, d);
    for (size_t b = 0; b < d; b++) {
        for (size_t b2 = 0; b2 < d; b2++) {
            cplx s = 0;
            for (size_t a = 0; a < d; a++) {
                s += phi[a * d + b] * std::conj(psi[a * d + b2]);
            }
            w(b, b2) = s;
        }
    }
    return hermitian_part(w);
}

}  // namespace

int default_restarts(int n) {
    return n <= 7 ? 16 : 32;
}

CVec optimize_state(const std::vector<Observable> &alice, const std::vector<Observable> &bob) {
    auto eig = hermitian_eig(bell_operator(matrices(alice), matrices(bob)));
    return normalized(eig.front().vector);
}

std::vector<Observable> best_response_alice(const CVec &state, const std::vector<Observable> &bob) {
    const size_t d = local_dim(state, bob);
    const size_t n = bob.size();
    std::vector<Observable> out;
    out.reserve(n);
    for (size_t i = 0; i < n; i++) {
        CMat k = i == 0 ? bob[0].matrix() - bob[n - 1].matrix() : bob[i].matrix() + bob[i - 1].matrix();
        out.push_back(Observable::dichotomic(herm_sign(effective_alice(state, k, d)), Party::alice, static_cast<int>(i + 1)));
    }
    return out;
}

std::vector<Observable> best_response_bob(const CVec &state, const std::vector<Observable> &alice) {
    const size_t d = local_dim(state, alice);
    const size_t n = alice.size();
    std::vector<Observable> out;
    out.reserve(n);
    for (size_t i = 0; i < n; i++) {
        CMat k = i + 1 < n ? alice[i].matrix() + alice[i + 1].matrix() : alice[i].matrix() - alice[0].matrix();
        out.push_back(Observable::dichotomic(herm_sign(effective_bob(state, k, d)), Party::bob, static_cast<int>(i + 1)));
    }
    return out;
}

SeesawResult seesaw(int n, const SeesawConfig &cfg) {
    ChainScenario sc(n, cfg.dim);
    int restarts = cfg.restarts == 0 ? default_restarts(n) : cfg.restarts;
    if (restarts < 1 || cfg.max_iters < 1 || !(cfg.tol > 0)) {
        throw std::invalid_argument("seesaw needs restarts >= 1, max_iters >= 1 and tol > 0");
    }
    const size_t d = static_cast<size_t>(cfg.dim);

    struct Run {
        std::vector<double> trace;
        bool converged = false;
        std::vector<Observable> alice, bob;
        CVec state;
    };
    std::vector<Run> runs(static_cast<size_t>(restarts));
    for (int k = 0; k < restarts; k++) {
        Run &run = runs[static_cast<size_t>(k)];
        Rng rng(cfg.seed + static_cast<uint64_t>(k));
        for (int i = 1; i <= n; i++) {
            run.alice.push_back(Observable::dichotomic(random_dichotomic(rng, d), Party::alice, i));
        }
        for (int i = 1; i <= n; i++) {
            run.bob.push_back(Observable::dichotomic(random_dichotomic(rng, d), Party::bob, i));
        }
        auto top = [&]() {
            auto eig = hermitian_eig(bell_operator(matrices(run.alice), matrices(run.bob)));
            run.state = normalized(eig.front().vector);
            return eig.front().value;
        };
        run.trace.push_back(top());
        int quiet_rounds = 0;
        for (int it = 0; it < cfg.max_iters; it++) {
            run.alice = best_response_alice(run.state, run.bob);
            run.bob = best_response_bob(run.state, run.alice);
            double value = top();
            double gain = value - run.trace.back();
            run.trace.push_back(value);
            quiet_rounds = gain < cfg.tol ? quiet_rounds + 1 : 0;
            if (quiet_rounds >= 2) {
                run.converged = true;
                break;
            }
        }
    }

    size_t best = 0;
    for (size_t k = 1; k < runs.size(); k++) {
        if (runs[k].trace.back() > runs[best].trace.back()) {
            best = k;
        }
    }
    SeesawResult result{
        runs[best].trace.back(),
        Realization(sc, runs[best].state, runs[best].alice, runs[best].bob),
        {},
        {},
        static_cast<int>(best),
        runs[best].converged,
    };
    for (auto &run : runs) {
        result.iterations.push_back(std::move(run.trace));
        result.restart_converged.push_back(run.converged);
    }
    return result;
}

}  // namespace chainbell

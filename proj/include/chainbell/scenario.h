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

#ifndef CHAINBELL_SCENARIO_H
#define CHAINBELL_SCENARIO_H

#include <string>
#include <vector>

#include "chainbell/qmath.h"

namespace chainbell {

/// n settings per party on a local Hilbert space of dimension dim.
struct ChainScenario {
    int n;
    int dim;

    /// Throws std::invalid_argument unless n >= 2 and dim is 2 or 4.
    ChainScenario(int n, int dim);
};

enum class Party { alice, bob };

/// A Hermitian operator attached to one party's setting. Observables built
/// with dichotomic() are also involutory (eigenvalues +-1). general() admits
/// any Hermitian operator, which the noise models need.
class Observable {
   public:
    static Observable dichotomic(CMat matrix, Party party, int index);
    static Observable general(CMat matrix, Party party, int index);

    const CMat &matrix() const {
        return matrix_;
    }
    Party party() const {
        return party_;
    }
    /// 1-based setting index.
    int index() const {
        return index_;
    }
    bool is_dichotomic() const {
        return dichotomic_;
    }
    std::string label() const;

   private:
    Observable(CMat matrix, Party party, int index, bool dichotomic);

    CMat matrix_;
    Party party_;
    int index_;
    bool dichotomic_;
};

/// Pure state on C^dim (x) C^dim plus n observables per party. Settings are
/// 1-based in every accessor; storage is 0-based.
class Realization {
   public:
    Realization(ChainScenario scenario, CVec state, std::vector<Observable> alice, std::vector<Observable> bob);

    const ChainScenario &scenario() const {
        return scenario_;
    }
    int n() const {
        return scenario_.n;
    }
    size_t dim() const {
        return static_cast<size_t>(scenario_.dim);
    }
    const CVec &state() const {
        return state_;
    }
    const std::vector<Observable> &alice() const {
        return alice_;
    }
    const std::vector<Observable> &bob() const {
        return bob_;
    }
    const CMat &A(int i) const;
    const CMat &B(int j) const;
    /// True when every observable is dichotomic.
    bool all_dichotomic() const;

    Realization with_state(CVec state) const;
    Realization with_bob(std::vector<Observable> bob) const;

   private:
    ChainScenario scenario_;
    CVec state_;
    std::vector<Observable> alice_;
    std::vector<Observable> bob_;
};

/// Alice observables at angles (i-1)pi/n and Bob's at (2i-1)pi/(2n) in the
/// x-z plane, sharing |phi+>. With dim == 4 each observable is tensored with
/// the identity on an auxiliary qubit and the state becomes |phi+>|phi+>.
Realization reference_realization(int n, int dim = 2);

/// Observables on the xz-plane: sin(angle) sigma_x + cos(angle) sigma_z.
CMat xz_observable(double angle);

double reference_alice_angle(int n, int i);
double reference_bob_angle(int n, int j);

/// sum_i (A_i + A_{i+1}) (x) B_i with A_{n+1} = -A_1.
CMat bell_operator(const std::vector<CMat> &alice, const std::vector<CMat> &bob);
CMat bell_operator(const Realization &r);
double bell_value(const Realization &r);

double classical_bound(int n);
double quantum_optimum(int n);

/// <psi| A_i (x) B_j |psi>.
double correlation(const Realization &r, int i, int j);
/// (cos(pi x/n) + cos(pi (x+1)/n)) / (2 cos(pi/(2n))).
double predicted_correlation(int n, int x);

/// <psi| M (x) I |psi>, <psi| I (x) M |psi>, <psi| MA (x) MB |psi> (real parts).
double expect_alice(const Realization &r, const CMat &m);
double expect_bob(const Realization &r, const CMat &m);
double expect_joint(const Realization &r, const CMat &ma, const CMat &mb);

/// M (x) I and I (x) M on the joint space.
CMat lift_alice(const CMat &m, size_t dim);
CMat lift_bob(const CMat &m, size_t dim);

}  // namespace chainbell

#endif

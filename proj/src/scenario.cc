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

#include "chainbell/scenario.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chainbell {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

ChainScenario::ChainScenario(int n, int dim) : n(n), dim(dim) {
    require(n >= 2, "chained Bell scenario needs n >= 2, got " + std::to_string(n));
    require(dim == 2 || dim == 4, "local dimension must be 2 or 4, got " + std::to_string(dim));
}

Observable::Observable(CMat matrix, Party party, int index, bool dichotomic)
    : matrix_(std::move(matrix)), party_(party), index_(index), dichotomic_(dichotomic) {
}

Observable Observable::dichotomic(CMat matrix, Party party, int index) {
    require(index >= 1, "observable index is 1-based");
    require(is_hermitian(matrix, 1e-12), "observable is not Hermitian");
    require(is_involutory(matrix, 1e-10), "observable is not involutory");
    return Observable(hermitian_part(matrix), party, index, true);
}

Observable Observable::general(CMat matrix, Party party, int index) {
    require(index >= 1, "observable index is 1-based");
    require(is_hermitian(matrix, 1e-12), "observable is not Hermitian");
    bool inv = is_involutory(matrix, 1e-10);
    return Observable(hermitian_part(matrix), party, index, inv);
}

std::string Observable::label() const {
    return (party_ == Party::alice ? "A" : "B") + std::to_string(index_);
}

Realization::Realization(ChainScenario scenario, CVec state, std::vector<Observable> alice, std::vector<Observable> bob)
    : scenario_(scenario), state_(std::move(state)), alice_(std::move(alice)), bob_(std::move(bob)) {
    const size_t d = dim();
    const size_t n = static_cast<size_t>(scenario_.n);
    require(state_.dim() == d * d, "state dimension must be dim^2");
    require(std::abs(vec_norm(state_) - 1) <= 1e-12, "state is not normalized");
    require(alice_.size() == n && bob_.size() == n, "need exactly n observables per party");
    for (size_t k = 0; k < n; k++) {
        require(alice_[k].matrix().rows() == d && alice_[k].matrix().cols() == d, "Alice observable has wrong size");
        require(bob_[k].matrix().rows() == d && bob_[k].matrix().cols() == d, "Bob observable has wrong size");
        require(alice_[k].party() == Party::alice && bob_[k].party() == Party::bob, "observable party mismatch");
        require(alice_[k].index() == static_cast<int>(k + 1) && bob_[k].index() == static_cast<int>(k + 1),
                "observable label does not match its position");
    }
}

const CMat &Realization::A(int i) const {
    require(i >= 1 && i <= n(), "Alice setting index out of range");
    return alice_[static_cast<size_t>(i - 1)].matrix();
}

const CMat &Realization::B(int j) const {
    require(j >= 1 && j <= n(), "Bob setting index out of range");
    return bob_[static_cast<size_t>(j - 1)].matrix();
}

bool Realization::all_dichotomic() const {
    for (size_t k = 0; k < alice_.size(); k++) {
        if (!alice_[k].is_dichotomic() || !bob_[k].is_dichotomic()) {
            return false;
        }
    }
    return true;
}

Realization Realization::with_state(CVec state) const {
    return Realization(scenario_, std::move(state), alice_, bob_);
}

Realization Realization::with_bob(std::vector<Observable> bob) const {
    return Realization(scenario_, state_, alice_, std::move(bob));
}

CMat xz_observable(double angle) {
    return std::sin(angle) * pauli::X() + std::cos(angle) * pauli::Z();
}

double reference_alice_angle(int n, int i) {
    return (i - 1) * kPi / n;
}

double reference_bob_angle(int n, int j) {
    return (2 * j - 1) * kPi / (2 * n);
}

Realization reference_realization(int n, int dim) {
    ChainScenario sc(n, dim);
    std::vector<Observable> alice;
    std::vector<Observable> bob;
    CMat aux = CMat::identity(static_cast<size_t>(dim / 2));
    for (int i = 1; i <= n; i++) {
        alice.push_back(Observable::dichotomic(kron(xz_observable(reference_alice_angle(n, i)), aux), Party::alice, i));
        bob.push_back(Observable::dichotomic(kron(xz_observable(reference_bob_angle(n, i)), aux), Party::bob, i));
    }
    CVec state = maximally_entangled(2);
    if (dim == 4) {
        // Local order (qubit, auxiliary) on each side.
        CVec pair = kron(maximally_entangled(2), maximally_entangled(2));
        state = CVec(16);
        for (size_t a1 = 0; a1 < 2; a1++) {
            for (size_t b1 = 0; b1 < 2; b1++) {
                for (size_t a2 = 0; a2 < 2; a2++) {
                    for (size_t b2 = 0; b2 < 2; b2++) {
                        size_t src = ((a1 * 2 + b1) * 2 + a2) * 2 + b2;
                        size_t dst = (a1 * 2 + a2) * 4 + (b1 * 2 + b2);
                        state[dst] = pair[src];
                    }
                }
            }
        }
    }
    return Realization(sc, std::move(state), std::move(alice), std::move(bob));
}

CMat bell_operator(const std::vector<CMat> &alice, const std::vector<CMat> &bob) {
    require(!alice.empty() && alice.size() == bob.size(), "bell_operator needs n observables per party");
    const size_t n = alice.size();
    const size_t d = alice[0].rows();
    CMat total(d * d, d * d);
    for (size_t i = 0; i < n; i++) {
        CMat sum = i + 1 < n ? alice[i] + alice[i + 1] : alice[i] - alice[0];
        total += kron(sum, bob[i]);
    }
    return hermitian_part(total);
}

CMat bell_operator(const Realization &r) {
    std::vector<CMat> a;
    std::vector<CMat> b;
    for (int i = 1; i <= r.n(); i++) {
        a.push_back(r.A(i));
        b.push_back(r.B(i));
    }
    return bell_operator(a, b);
}

double bell_value(const Realization &r) {
    double total = 0;
    for (int i = 1; i <= r.n(); i++) {
        CMat sum = i < r.n() ? r.A(i) + r.A(i + 1) : r.A(i) - r.A(1);
        total += expect_joint(r, sum, r.B(i));
    }
    return total;
}

double classical_bound(int n) {
    require(n >= 2, "n must be >= 2");
    return 2.0 * n - 2.0;
}

double quantum_optimum(int n) {
    require(n >= 2, "n must be >= 2");
    return 2.0 * n * std::cos(kPi / (2.0 * n));
}

double correlation(const Realization &r, int i, int j) {
    return expect_joint(r, r.A(i), r.B(j));
}

double predicted_correlation(int n, int x) {
    require(n >= 2, "n must be >= 2");
    return (std::cos(kPi * x / n) + std::cos(kPi * (x + 1) / n)) / (2.0 * std::cos(kPi / (2.0 * n)));
}

CMat lift_alice(const CMat &m, size_t dim) {
    return kron(m, CMat::identity(dim));
}

CMat lift_bob(const CMat &m, size_t dim) {
    return kron(CMat::identity(dim), m);
}

double expect_alice(const Realization &r, const CMat &m) {
    return expectation(lift_alice(m, r.dim()), r.state()).real();
}

double expect_bob(const Realization &r, const CMat &m) {
    return expectation(lift_bob(m, r.dim()), r.state()).real();
}

double expect_joint(const Realization &r, const CMat &ma, const CMat &mb) {
    return expectation(kron(ma, mb), r.state()).real();
}

}  // namespace chainbell

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

#include "chainbell/certify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chainbell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-9;

const CMat &party_op(const Realization &r, Party party, int i) {
    return party == Party::alice ? r.A(i) : r.B(i);
}

// A_{i+1} with the wrap A_{n+1} = -A_1.
CMat next_alice(const Realization &r, int i) {
    return i < r.n() ? r.A(i + 1) : -r.A(1);
}

// B_{i-1} with the wrap B_0 = -B_n.
CMat prev_bob(const Realization &r, int i) {
    return i > 1 ? r.B(i - 1) : -r.B(r.n());
}

double checked_norm(double nu, const char *what) {
    if (nu <= kDegenerate) {
        throw NumericError(std::string("degenerate norm in ") + what);
    }
    return nu;
}

}  // namespace

double anticomm_expectation(const Realization &r, Party party, int i, int j) {
    CMat ac = anticommutator(party_op(r, party, i), party_op(r, party, j));
    return party == Party::alice ? expect_alice(r, ac) : expect_bob(r, ac);
}

double alice_norm(const Realization &r, int i) {
    CMat sum = r.A(i) + next_alice(r, i);
    return std::sqrt(std::max(0.0, expect_alice(r, sum * sum)));
}

double bob_norm(const Realization &r, int i) {
    CMat sum = r.B(i) + prev_bob(r, i);
    return std::sqrt(std::max(0.0, expect_bob(r, sum * sum)));
}

CMat script_A(const Realization &r, int i) {
    double nu = checked_norm(alice_norm(r, i), "script_A");
    return (1.0 / nu) * (r.A(i) + next_alice(r, i));
}

CMat script_B(const Realization &r, int i) {
    double nu = checked_norm(bob_norm(r, i), "script_B");
    return (1.0 / nu) * (r.B(i) + prev_bob(r, i));
}

CMat build_L(const Realization &r, int i) {
    return lift_alice(script_A(r, i), r.dim()) - lift_bob(r.B(i), r.dim());
}

double gamma_expectation(const Realization &r) {
    double total = 0;
    for (int i = 1; i <= r.n(); i++) {
        double residual = vec_norm(op_apply(build_L(r, i), r.state()));
        total += 0.5 * alice_norm(r, i) * residual * residual;
    }
    return total;
}

SOSReport check_selftest_relations(const Realization &r, double tol) {
    const int n = r.n();
    SOSReport rep{};
    rep.n = n;
    rep.tolerance = tol;
    rep.bell_value = bell_value(r);
    rep.nu_sum = 0;
    for (int i = 1; i <= n; i++) {
        rep.nu.push_back(alice_norm(r, i));
        rep.nu_sum += rep.nu.back();
        rep.l_residuals.push_back(vec_norm(op_apply(build_L(r, i), r.state())));
        rep.bob_nu.push_back(bob_norm(r, i));
        CMat lb = lift_alice(r.A(i), r.dim()) - lift_bob(script_B(r, i), r.dim());
        rep.bob_l_residuals.push_back(vec_norm(op_apply(lb, r.state())));
    }
    rep.gamma_expectation = gamma_expectation(r);
    rep.gamma_identity_defect = std::abs(rep.gamma_expectation - (rep.nu_sum - rep.bell_value));

    std::vector<CMat> sb;
    for (int i = 1; i <= n; i++) {
        sb.push_back(script_B(r, i));
    }
    for (int i = 1; i <= n; i++) {
        for (int x = 1; i + x <= n; x++) {
            double expected = 2.0 * std::cos(kPi * x / n);
            rep.alice_anticomm_dev = std::max(rep.alice_anticomm_dev, std::abs(anticomm_expectation(r, Party::alice, i, i + x) - expected));
            rep.bob_anticomm_dev = std::max(rep.bob_anticomm_dev, std::abs(anticomm_expectation(r, Party::bob, i, i + x) - expected));
            double sbx = expect_bob(r, anticommutator(sb[static_cast<size_t>(i - 1)], sb[static_cast<size_t>(i + x - 1)]));
            rep.bob_script_anticomm_dev = std::max(rep.bob_script_anticomm_dev, std::abs(sbx - expected));
        }
        for (int j = 1; j <= n; j++) {
            rep.correlation_dev = std::max(rep.correlation_dev, std::abs(correlation(r, i, j) - predicted_correlation(n, j - i)));
        }
    }

    bool ok = rep.gamma_expectation <= tol && rep.alice_anticomm_dev <= tol && rep.bob_anticomm_dev <= tol &&
              rep.correlation_dev <= tol && rep.bob_script_anticomm_dev <= tol;
    for (int k = 0; k < n; k++) {
        ok = ok && rep.l_residuals[static_cast<size_t>(k)] <= tol && rep.bob_l_residuals[static_cast<size_t>(k)] <= tol;
    }
    rep.pass = ok;
    return rep;
}

StateReconstruction reconstruct_state(const Realization &r) {
    if (r.dim() != 2) {
        throw std::invalid_argument("reconstruct_state supports dim = 2 only; dim = 4 needs 15 correlators");
    }
    const int n = r.n();
    StateReconstruction out{};
    out.odd = n % 2 == 1;
    CMat c1, c2, c3;
    if (out.odd) {
        const int mid = (n + 1) / 2;
        const int half = n / 2;
        c1 = kron(script_A(r, mid), r.B(mid));
        c2 = CMat(4, 4);
        c3 = CMat(4, 4);
        CMat sa_mid = script_A(r, mid);
        for (int i = 1; i <= half; i++) {
            int j = n + 1 - i;
            double denom = 2.0 - anticomm_expectation(r, Party::bob, i, j);
            if (denom <= kDegenerate) {
                throw NumericError("degenerate denominator in C2 reconstruction");
            }
            CMat da = script_A(r, i) - script_A(r, j);
            CMat db = r.B(i) - r.B(j);
            c2 += (1.0 / denom) * kron(da, db);
            c3 += (1.0 / denom) * kron(sa_mid * da, r.B(mid) * db);
        }
        c2 *= 1.0 / half;
        c3 *= 1.0 / half;
    } else {
        const int half = n / 2;
        c1 = kron(r.A(1), script_B(r, 1));
        c2 = kron(r.A(half + 1), script_B(r, half + 1));
        if (half >= 2) {
            c3 = CMat(4, 4);
            for (int i = 2; i <= half; i++) {
                c3 += kron(commutator(r.A(i), r.A(i + half)), commutator(script_B(r, i), script_B(r, i + half)));
            }
            c3 *= 1.0 / (4.0 * (half - 1));
        } else {
            c3 = c1 * c2;
        }
    }
    out.product_defect = frobenius_norm(c3 - c1 * c2);
    out.rho = 0.25 * (CMat::identity(4) + c1 + c2 + c3);
    out.c_ops = {std::move(c1), std::move(c2), std::move(c3)};
    out.fidelity_with_input = expectation(out.rho, r.state()).real();
    out.fidelity_with_phi_plus = expectation(out.rho, maximally_entangled(2)).real();
    out.purity = trace(out.rho * out.rho).real();
    CMat herm = hermitian_part(out.rho);
    out.min_eigenvalue = hermitian_eig(herm).back().value;
    return out;
}

}  // namespace chainbell

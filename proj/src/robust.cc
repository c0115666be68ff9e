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

#include "chainbell/robust.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace chainbell {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

double half_cos(int n) {
    require(n >= 2, "n must be >= 2");
    return std::cos(kPi / (2.0 * n));
}

// Quantum-minus-classical gap 2n cos(pi/2n) - (2n - 2).
double gap(int n) {
    return 2.0 * n * half_cos(n) - 2.0 * n + 2.0;
}

// q = (r - 1)((n - 1) sec(pi/2n) - n) / n, which equals eps^2 / 2.
double radicand(int n, double r) {
    double q = (r - 1.0) * ((n - 1.0) / half_cos(n) - n) / n;
    if (q < -1e-12) {
        throw std::invalid_argument("robustness bound evaluated at r > 1");
    }
    return std::max(q, 0.0);
}

}  // namespace

std::string NoiseModel::describe() const {
    std::ostringstream out;
    out << (normalized ? "(B + eps I)/sqrt(1 + eps^2)" : "B + eps I") << " with eps = " << epsilon;
    return out.str();
}

CMat noisy_operator(const CMat &b, const NoiseModel &nm) {
    require(nm.epsilon >= 0, "noise epsilon must be non-negative");
    CMat out = b + nm.epsilon * CMat::identity(b.rows());
    if (nm.normalized) {
        out *= 1.0 / std::sqrt(1.0 + nm.epsilon * nm.epsilon);
    }
    return out;
}

Realization noisy_bob(const Realization &r, const NoiseModel &nm) {
    require(nm.epsilon >= 0, "noise epsilon must be non-negative");
    if (nm.epsilon == 0) {
        return r;
    }
    std::vector<Observable> bob;
    for (int j = 1; j <= r.n(); j++) {
        bob.push_back(Observable::general(noisy_operator(r.B(j), nm), Party::bob, j));
    }
    return r.with_bob(std::move(bob));
}

double xi_from_epsilon(int n, double eps) {
    require(eps >= 0, "epsilon must be non-negative");
    return n * eps * eps * half_cos(n);
}

double epsilon_from_xi(int n, double xi) {
    require(xi >= 0, "xi must be non-negative");
    return std::sqrt(xi / (n * half_cos(n)));
}

double r_from_xi(int n, double xi) {
    require(xi >= 0, "xi must be non-negative");
    return 1.0 - xi / gap(n);
}

double xi_from_r(int n, double r) {
    require(r <= 1.0 + 1e-12, "relative violation r must be <= 1");
    return std::max(0.0, (1.0 - r) * gap(n));
}

double f_s(int n, double r) {
    double q = radicand(n, r);
    double sec = 1.0 / half_cos(n);
    return 2.0 * (n - 1) * (r - 1) * sec / n + 4.0 * std::sqrt(2.0) * std::sqrt(q) - 2.0 * r + 2.0;
}

double f_o(int n, double r) {
    double q = radicand(n, r);
    return 2.0 * std::sqrt(2.0) * std::pow(q, 1.5) + 10.0 * q + 8.0 * std::sqrt(2.0) * std::sqrt(q);
}

double f_s_of_epsilon(double eps) {
    require(eps >= 0, "epsilon must be non-negative");
    return 4.0 * eps + eps * eps;
}

double f_o_of_epsilon(double eps) {
    require(eps >= 0, "epsilon must be non-negative");
    return eps * eps * eps + 5.0 * eps * eps + 8.0 * eps;
}

double fidelity_lower(double f) {
    require(f >= 0 && f <= 2, "fidelity_lower needs f in [0, 2]");
    double h = 1.0 - f / 2.0;
    return h * h;
}

const char *bound_name(BoundKind which) {
    return which == BoundKind::state ? "state" : "observable";
}

double threshold_r(int n, double target_F, BoundKind which) {
    require(target_F > 0 && target_F < 1, "target fidelity must lie in (0, 1)");
    auto f = [&](double r) { return which == BoundKind::state ? f_s(n, r) : f_o(n, r); };
    const int steps = 200;

    // f decreases from f(0) to f(1) = 0; find r_lo where f crosses 2.
    double lo = 0.0;
    if (f(0.0) > 2.0) {
        double a = 0.0, b = 1.0;
        for (int k = 0; k < steps; k++) {
            double m = 0.5 * (a + b);
            (f(m) > 2.0 ? a : b) = m;
        }
        lo = b;
    }
    auto F = [&](double r) { return fidelity_lower(std::min(2.0, f(r))); };
    double a = lo, b = 1.0;
    const int probes = 64;
    for (int k = 1; k <= probes; k++) {
        double r0 = lo + (1.0 - lo) * (k - 1) / probes;
        double r1 = lo + (1.0 - lo) * k / probes;
        if (F(r1) < F(r0) - 1e-14) {
            throw NumericError("threshold_r: fidelity bound is not monotone in r");
        }
    }
    if (!(F(a) <= target_F && F(b) >= target_F)) {
        throw std::invalid_argument("threshold_r: no sign change on the bracket");
    }
    for (int k = 0; k < steps && b - a > 1e-15; k++) {
        double m = 0.5 * (a + b);
        (F(m) < target_F ? a : b) = m;
    }
    return 0.5 * (a + b);
}

RobustnessPoint robustness_at_r(int n, double r) {
    RobustnessPoint p{};
    p.n = n;
    p.r = r;
    p.xi = xi_from_r(n, r);
    p.epsilon = epsilon_from_xi(n, p.xi);
    p.f_s = f_s(n, r);
    p.f_o = f_o(n, r);
    p.F_s_lower = p.f_s <= 2.0 ? fidelity_lower(p.f_s) : 0.0;
    p.F_o_lower = p.f_o <= 2.0 ? fidelity_lower(p.f_o) : 0.0;
    return p;
}

RobustnessPoint robustness_at_epsilon(int n, double eps) {
    return robustness_at_r(n, r_from_xi(n, xi_from_epsilon(n, eps)));
}

SwapObservables shifted_swap(const SwapObservables &s, const NoiseShifts &shifts) {
    SwapObservables out = s;
    const size_t d = s.ZA.rows();
    out.XA += shifts.alpha_A * CMat::identity(d);
    out.XB += shifts.alpha_B * CMat::identity(d);
    out.ZA += shifts.beta_A * CMat::identity(d);
    out.ZB += shifts.beta_B * CMat::identity(d);
    return out;
}

double empirical_distance(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts,
                          NoisyInsertion inserted) {
    const size_t d = r.dim();
    SwapObservables noisy = shifted_swap(ideal, shifts);
    CMat op_ideal = CMat::identity(d * d);
    CMat op_noisy = CMat::identity(d * d);
    if (inserted == NoisyInsertion::XA) {
        op_ideal = lift_alice(ideal.XA, d);
        op_noisy = lift_alice(noisy.XA, d);
    } else if (inserted == NoisyInsertion::ZA) {
        op_ideal = lift_alice(ideal.ZA, d);
        op_noisy = lift_alice(noisy.ZA, d);
    } else if (inserted == NoisyInsertion::XB) {
        op_ideal = lift_bob(ideal.XB, d);
        op_noisy = lift_bob(noisy.XB, d);
    } else if (inserted == NoisyInsertion::ZB) {
        op_ideal = lift_bob(ideal.ZB, d);
        op_noisy = lift_bob(noisy.ZB, d);
    }
    CVec out_ideal = isometry(ideal, op_apply(op_ideal, r.state()), d);
    CVec out_noisy = isometry(noisy, op_apply(op_noisy, r.state()), d);
    return vec_norm(out_noisy - out_ideal);
}

std::vector<EmpiricalBoundRow> empirical_bound_check(const Realization &r, const std::vector<double> &eps_grid,
                                                     NoisyInsertion inserted) {
    require(r.n() % 2 == 1, "empirical_bound_check needs odd n");
    require(inserted == NoisyInsertion::none || inserted == NoisyInsertion::XB || inserted == NoisyInsertion::ZB,
            "empirical_bound_check inserts nothing, X_B or Z_B");
    SwapObservables ideal = swap_observables(r);
    std::vector<EmpiricalBoundRow> rows;
    for (double eps : eps_grid) {
        require(eps >= 0, "epsilon must be non-negative");
        NoiseShifts shifts;
        shifts.alpha_B = eps;
        shifts.beta_B = eps;
        EmpiricalBoundRow row{};
        row.epsilon = eps;
        row.distance = empirical_distance(r, ideal, shifts, inserted);
        row.bound = inserted == NoisyInsertion::none ? f_s_of_epsilon(eps) : f_o_of_epsilon(eps);
        row.within = row.distance <= row.bound + 1e-12;
        rows.push_back(row);
    }
    return rows;
}

namespace {

// The bound algebra is written for projector Z and control X. For even n the
// roles swap, so the shifts are re-assigned by role.
struct RoleShifts {
    double proj_A, proj_B, ctrl_A, ctrl_B;
};

RoleShifts by_role(const SwapObservables &s, const NoiseShifts &sh) {
    if (s.odd) {
        return {sh.beta_A, sh.beta_B, sh.alpha_A, sh.alpha_B};
    }
    return {sh.alpha_A, sh.alpha_B, sh.beta_A, sh.beta_B};
}

struct NoisyLifts {
    CMat pa, pb, ca, cb;
};

NoisyLifts noisy_lifts(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts) {
    SwapObservables noisy = shifted_swap(ideal, shifts);
    const size_t d = r.dim();
    return {lift_alice(noisy.projector_A(), d), lift_bob(noisy.projector_B(), d), lift_alice(noisy.control_A(), d),
            lift_bob(noisy.control_B(), d)};
}

double norm_of(const CMat &op, const CVec &psi) {
    return vec_norm(op_apply(op, psi));
}

double branch_sum(const Realization &r, const NoisyLifts &t) {
    const size_t d = r.dim();
    const CMat id = CMat::identity(d * d);
    double total = 0;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            CMat op = (id + (a ? -1.0 : 1.0) * t.pa) * (id + (b ? -1.0 : 1.0) * t.pb);
            if (b) {
                op = t.cb * op;
            }
            if (a) {
                op = t.ca * op;
            }
            total += norm_of(op, r.state());
        }
    }
    return total;
}

}  // namespace

double general_state_bound(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts) {
    RoleShifts k = by_role(ideal, shifts);
    NoisyLifts t = noisy_lifts(r, ideal, shifts);
    const CVec &psi = r.state();
    double f1 = 2 * k.proj_A + k.proj_B + k.proj_B * norm_of(t.pa, psi);
    double f2 = k.proj_B * (norm_of(t.cb, psi) + norm_of(t.cb * t.pa, psi)) + 4 * k.ctrl_B + 2 * k.proj_A * norm_of(t.cb, psi);
    double f3 = k.proj_A * (norm_of(t.ca, psi) + norm_of(t.ca * t.pb, psi)) + 4 * k.ctrl_A + 2 * k.proj_B * norm_of(t.ca, psi);
    CMat cc = t.ca * t.cb;
    double f4 = k.proj_B * (norm_of(cc, psi) + norm_of(cc * t.pa, psi)) + 2 * k.proj_A * norm_of(cc, psi) +
                4 * k.ctrl_B * norm_of(t.ca, psi) + 4 * k.ctrl_A;
    return 0.25 * (f1 + f2 + f3 + f4);
}

double general_observable_bound_x(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts,
                                  Party m) {
    double alpha = m == Party::alice ? shifts.alpha_A : shifts.alpha_B;
    NoisyLifts t = noisy_lifts(r, ideal, shifts);
    return 0.25 * alpha * branch_sum(r, t) + general_state_bound(r, ideal, shifts);
}

double general_observable_bound_z(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts,
                                  Party m) {
    double beta = m == Party::alice ? shifts.beta_A : shifts.beta_B;
    NoisyLifts t = noisy_lifts(r, ideal, shifts);
    return 0.25 * beta * branch_sum(r, t) + general_state_bound(r, ideal, shifts);
}

}  // namespace chainbell

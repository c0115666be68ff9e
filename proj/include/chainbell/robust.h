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

#ifndef CHAINBELL_ROBUST_H
#define CHAINBELL_ROBUST_H

#include <string>
#include <vector>

#include "chainbell/scenario.h"
#include "chainbell/swapcircuit.h"

namespace chainbell {

/// Shift noise on Bob's observables. normalized=false gives B_i + eps I;
/// normalized=true divides by sqrt(1 + eps^2). Neither is involutory for
/// eps > 0, so noisy observables are carried as general Hermitian operators.
struct NoiseModel {
    double epsilon = 0;
    bool normalized = false;

    std::string describe() const;
};

CMat noisy_operator(const CMat &b, const NoiseModel &nm);
Realization noisy_bob(const Realization &r, const NoiseModel &nm);

/// xi = n eps^2 cos(pi/(2n)): the Bell-value shortfall attributed to eps.
double xi_from_epsilon(int n, double eps);
double epsilon_from_xi(int n, double xi);
/// r = 1 - xi / (2n cos(pi/(2n)) - 2n + 2).
double r_from_xi(int n, double xi);
double xi_from_r(int n, double r);

/// Trace-distance bounds as functions of the relative violation r.
/// Both reject r > 1 (negative radicand beyond -1e-12).
double f_s(int n, double r);
double f_o(int n, double r);
/// The same bounds in terms of eps: 4 eps + eps^2 and eps^3 + 5 eps^2 + 8 eps.
double f_s_of_epsilon(double eps);
double f_o_of_epsilon(double eps);

/// (1 - f/2)^2 for f in [0, 2].
double fidelity_lower(double f);

enum class BoundKind { state, observable };

const char *bound_name(BoundKind which);

/// Smallest r at which the fidelity lower bound reaches target_F, found by
/// bisection on [r_lo, 1] with r_lo = max(0, r where f = 2).
double threshold_r(int n, double target_F, BoundKind which);

struct RobustnessPoint {
    int n;
    double epsilon;
    double xi;
    double r;
    double f_s;
    double f_o;
    /// Zero where the corresponding f exceeds 2.
    double F_s_lower;
    double F_o_lower;
};

RobustnessPoint robustness_at_r(int n, double r);
RobustnessPoint robustness_at_epsilon(int n, double eps);

/// Swap observables with X_B + alpha_B I and Z_B + beta_B I (and the Alice
/// analogues).
struct NoiseShifts {
    double alpha_A = 0;
    double alpha_B = 0;
    double beta_A = 0;
    double beta_B = 0;
};

SwapObservables shifted_swap(const SwapObservables &s, const NoiseShifts &shifts);

enum class NoisyInsertion { none, XA, ZA, XB, ZB };

/// ||Phi_noisy(O_noisy psi) - Phi(O psi)|| for the given insertion.
double empirical_distance(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts,
                          NoisyInsertion inserted);

struct EmpiricalBoundRow {
    double epsilon;
    double distance;
    double bound;
    bool within;
};

/// Odd n only; inserted must be none, XB or ZB. Noise eps on X_B and Z_B; compares against f_s_of_epsilon
/// (no insertion) or f_o_of_epsilon (X_B or Z_B inserted).
std::vector<EmpiricalBoundRow> empirical_bound_check(const Realization &r, const std::vector<double> &eps_grid,
                                                     NoisyInsertion inserted);

/// Four-parameter bounds: F_S = (f1 + f2 + f3 + f4) / 4 with the norm
/// factors ||X~ ... psi|| evaluated on the realization.
double general_state_bound(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts);
/// F_{O_X} for inserting X_m and F_{O_Z} for inserting Z_m.
double general_observable_bound_x(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts,
                                  Party m);
double general_observable_bound_z(const Realization &r, const SwapObservables &ideal, const NoiseShifts &shifts,
                                  Party m);

}  // namespace chainbell

#endif

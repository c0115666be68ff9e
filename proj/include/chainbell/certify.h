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

#ifndef CHAINBELL_CERTIFY_H
#define CHAINBELL_CERTIFY_H

#include <array>
#include <vector>

#include "chainbell/scenario.h"

namespace chainbell {

/// <psi| {X_i, X_j} |psi> for one party's observables.
double anticomm_expectation(const Realization &r, Party party, int i, int j);

/// nu_i = ||(A_i + A_{i+1}) psi||, A_{n+1} = -A_1; equals sqrt(2 + <{A_i, A_{i+1}}>)
/// for dichotomic observables.
double alice_norm(const Realization &r, int i);
/// nu'_i = ||(B_i + B_{i-1}) psi||, B_0 = -B_n.
double bob_norm(const Realization &r, int i);

/// (A_i + A_{i+1}) / nu_i. Throws NumericError when nu_i <= 1e-9.
CMat script_A(const Realization &r, int i);
/// (B_i + B_{i-1}) / nu'_i.
CMat script_B(const Realization &r, int i);

/// L_i = script_A(i) (x) I - I (x) B_i.
CMat build_L(const Realization &r, int i);

/// <Gamma> = sum_i (nu_i / 2) ||L_i psi||^2.
double gamma_expectation(const Realization &r);

struct SOSReport {
    int n;
    std::vector<double> nu;
    double nu_sum;
    double bell_value;
    double gamma_expectation;
    /// |<Gamma> - (sum nu - bell_value)|; zero up to rounding for dichotomic observables.
    double gamma_identity_defect;
    std::vector<double> l_residuals;
    double alice_anticomm_dev;
    double bob_anticomm_dev;
    double correlation_dev;
    /// Bob-side analogues: nu'_i, ||(A_i (x) I - I (x) script_B(i)) psi||, and the
    /// anticommutator spectrum of the script_B operators.
    std::vector<double> bob_nu;
    std::vector<double> bob_l_residuals;
    double bob_script_anticomm_dev;
    double tolerance;
    bool pass;
};

/// Evaluates every optimality condition against the closed forms. pass holds
/// when each deviation, residual and <Gamma> is at most tol.
SOSReport check_selftest_relations(const Realization &r, double tol);

struct StateReconstruction {
    /// C1 (x) C1, C2 (x) C2, C3 (x) C3. C3 is evaluated from its own sum.
    std::array<CMat, 3> c_ops;
    /// ||C3 - C1 C2||_F.
    double product_defect;
    CMat rho;
    double fidelity_with_input;
    double fidelity_with_phi_plus;
    double purity;
    double min_eigenvalue;
    bool odd;
};

/// rho = (I + C1 + C2 + C3) / 4 on two qubits. Rejects dim != 2.
StateReconstruction reconstruct_state(const Realization &r);

}  // namespace chainbell

#endif

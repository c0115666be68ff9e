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

#ifndef CHAINBELL_SWAPCIRCUIT_H
#define CHAINBELL_SWAPCIRCUIT_H

#include <string>

#include "chainbell/scenario.h"

namespace chainbell {

/// Local operators that play the roles of sigma_z / sigma_x for the swap
/// isometry. For odd n the Z operators are the projectors and the X
/// operators the controls; for even n the roles are exchanged.
struct SwapObservables {
    CMat ZA, XA, ZB, XB;
    bool odd;
    /// Normalizer applied to the even-n Z_B sum; empty for odd n.
    std::string zb_normalizer;

    const CMat &projector_A() const {
        return odd ? ZA : XA;
    }
    const CMat &projector_B() const {
        return odd ? ZB : XB;
    }
    const CMat &control_A() const {
        return odd ? XA : ZA;
    }
    const CMat &control_B() const {
        return odd ? XB : ZB;
    }
};

SwapObservables swap_observables(const Realization &r);

struct SwapRelationReport {
    /// ||(Z_A (x) I - I (x) Z_B) psi|| and the X analogue.
    double z_transfer;
    double x_transfer;
    /// ||({Z_A, X_A} (x) I) psi|| and ||(I (x) {Z_B, X_B}) psi||.
    double anticomm_a;
    double anticomm_b;

    double max() const;
};

SwapRelationReport check_swap_relations(const Realization &r, const SwapObservables &s);

/// The four-term swap isometry applied to v on H_A (x) H_B. The output
/// lives on H_A (x) H_B (x) C^2 (x) C^2 with the ancilla index fastest.
CVec isometry(const SwapObservables &s, const CVec &v, size_t dim);

/// (1 + P_A) psi / sqrt(2), P_A the Alice projector-role operator.
CVec expected_junk(const Realization &r, const SwapObservables &s);

struct Insertion {
    enum class Kind { identity, XA, XB, ZA, ZB, alice, bob, joint };
    Kind kind = Kind::identity;
    int i = 0;
    int j = 0;

    static Insertion joint_ab(int i, int j) {
        return {Kind::joint, i, j};
    }
    std::string label() const;
};

/// The operator on H_A (x) H_B for an insertion.
CMat insertion_operator(const Realization &r, const SwapObservables &s, const Insertion &ins);

/// Predicted ancilla vector O' |phi+> for an insertion at the reference
/// realization: the ancilla images are sigma_z for the projector role and
/// sigma_x for the control role, and A_i -> sin(theta_i) Z' + cos(theta_i) X'.
CVec ancilla_target(const Realization &r, const Insertion &ins);

struct SwapOutput {
    CVec joint;
    double joint_norm;
    /// Reduced state of the two ancilla qubits, normalized to unit trace.
    CMat ancilla_state;
    /// Dominant ancilla factor of joint.
    CVec ancilla_vector;
    /// System factor paired with ancilla_vector; carries the overall norm.
    CVec junk_candidate;
    /// ||joint - junk_candidate (x) ancilla_vector||, the tail singular mass.
    double factorization_residual;
    /// <t| ancilla_state |t> for the requested target t.
    double ancilla_fidelity;
    /// ||joint - (<t| joint) (x) t||.
    double target_residual;
    /// |<chi|junk>| / (||chi|| ||junk||) against expected_junk.
    double junk_fidelity;
};

SwapOutput apply_isometry(const Realization &r, const SwapObservables &s, const CMat &inserted, const CVec &target);
SwapOutput apply_isometry(const Realization &r, const SwapObservables &s, const Insertion &ins);

}  // namespace chainbell

#endif

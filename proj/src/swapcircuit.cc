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

#include "chainbell/swapcircuit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chainbell/certify.h"

namespace chainbell {

namespace {

constexpr double kDegenerate = 1e-9;

double checked_sqrt(double radicand) {
    if (radicand <= kDegenerate * kDegenerate) {
        throw NumericError("degenerate normalizer in swap observables");
    }
    return std::sqrt(radicand);
}

// (1/count) sum_i (X_i + sign X_{n+1-i}) / sqrt(2 + sign <{X_i, X_{n+1-i}}>)
// over i = 1..count, with expectations taken on the given party.
CMat paired_sum(const Realization &r, const std::vector<CMat> &ops, Party party, int count, double sign) {
    const int n = r.n();
    CMat total(r.dim(), r.dim());
    for (int i = 1; i <= count; i++) {
        const CMat &x = ops[static_cast<size_t>(i - 1)];
        const CMat &y = ops[static_cast<size_t>(n - i)];
        CMat ac = anticommutator(x, y);
        double e = party == Party::alice ? expect_alice(r, ac) : expect_bob(r, ac);
        total += (1.0 / checked_sqrt(2.0 + sign * e)) * (x + sign * y);
    }
    total *= 1.0 / count;
    return total;
}

}  // namespace

double SwapRelationReport::max() const {
    return std::max({z_transfer, x_transfer, anticomm_a, anticomm_b});
}

SwapObservables swap_observables(const Realization &r) {
    const int n = r.n();
    std::vector<CMat> sa;
    std::vector<CMat> b;
    for (int i = 1; i <= n; i++) {
        sa.push_back(script_A(r, i));
        b.push_back(r.B(i));
    }
    SwapObservables s;
    s.odd = n % 2 == 1;
    if (s.odd) {
        const int mid = (n + 1) / 2;
        const int half = n / 2;
        s.ZA = sa[static_cast<size_t>(mid - 1)];
        s.ZB = b[static_cast<size_t>(mid - 1)];
        s.XA = paired_sum(r, sa, Party::alice, half, -1.0);
        s.XB = paired_sum(r, b, Party::bob, half, -1.0);
    } else {
        const int half = n / 2;
        s.ZA = paired_sum(r, sa, Party::alice, half, +1.0);
        s.XA = paired_sum(r, sa, Party::alice, half, -1.0);
        s.ZB = paired_sum(r, b, Party::bob, half, +1.0);
        s.XB = paired_sum(r, b, Party::bob, half, -1.0);
        s.zb_normalizer = "(2/n) sum (B_i + B_{n+1-i}) / sqrt(2 + <{B_i, B_{n+1-i}}>)";
    }
    return s;
}

SwapRelationReport check_swap_relations(const Realization &r, const SwapObservables &s) {
    const size_t d = r.dim();
    const CVec &psi = r.state();
    SwapRelationReport rep{};
    rep.z_transfer = vec_norm(op_apply(lift_alice(s.ZA, d) - lift_bob(s.ZB, d), psi));
    rep.x_transfer = vec_norm(op_apply(lift_alice(s.XA, d) - lift_bob(s.XB, d), psi));
    rep.anticomm_a = vec_norm(op_apply(lift_alice(anticommutator(s.ZA, s.XA), d), psi));
    rep.anticomm_b = vec_norm(op_apply(lift_bob(anticommutator(s.ZB, s.XB), d), psi));
    return rep;
}

CVec isometry(const SwapObservables &s, const CVec &v, size_t dim) {
    const size_t sys = dim * dim;
    if (v.dim() != sys || s.ZA.rows() != dim) {
        throw std::invalid_argument("isometry: dimension mismatch");
    }
    const CMat id = CMat::identity(sys);
    const CMat pa = lift_alice(s.projector_A(), dim);
    const CMat pb = lift_bob(s.projector_B(), dim);
    const CMat ca = lift_alice(s.control_A(), dim);
    const CMat cb = lift_bob(s.control_B(), dim);
    CVec out(sys * 4);
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            CVec w = op_apply(id + (b ? -1.0 : 1.0) * pb, v);
            w = op_apply(id + (a ? -1.0 : 1.0) * pa, w);
            if (b) {
                w = op_apply(cb, w);
            }
            if (a) {
                w = op_apply(ca, w);
            }
            size_t c = static_cast<size_t>(a * 2 + b);
            for (size_t k = 0; k < sys; k++) {
                out[k * 4 + c] = 0.25 * w[k];
            }
        }
    }
    return out;
}

CVec expected_junk(const Realization &r, const SwapObservables &s) {
    const size_t d = r.dim();
    CMat op = CMat::identity(d * d) + lift_alice(s.projector_A(), d);
    return (1.0 / std::sqrt(2.0)) * op_apply(op, r.state());
}

std::string Insertion::label() const {
    switch (kind) {
        case Kind::identity:
            return "I";
        case Kind::XA:
            return "X_A";
        case Kind::XB:
            return "X_B";
        case Kind::ZA:
            return "Z_A";
        case Kind::ZB:
            return "Z_B";
        case Kind::alice:
            return "A" + std::to_string(i);
        case Kind::bob:
            return "B" + std::to_string(j);
        case Kind::joint:
            return "A" + std::to_string(i) + "B" + std::to_string(j);
    }
    return "?";
}

CMat insertion_operator(const Realization &r, const SwapObservables &s, const Insertion &ins) {
    const size_t d = r.dim();
    switch (ins.kind) {
        case Insertion::Kind::identity:
            return CMat::identity(d * d);
        case Insertion::Kind::XA:
            return lift_alice(s.XA, d);
        case Insertion::Kind::XB:
            return lift_bob(s.XB, d);
        case Insertion::Kind::ZA:
            return lift_alice(s.ZA, d);
        case Insertion::Kind::ZB:
            return lift_bob(s.ZB, d);
        case Insertion::Kind::alice:
            return lift_alice(r.A(ins.i), d);
        case Insertion::Kind::bob:
            return lift_bob(r.B(ins.j), d);
        case Insertion::Kind::joint:
            return kron(r.A(ins.i), r.B(ins.j));
    }
    throw std::invalid_argument("unknown insertion");
}

CVec ancilla_target(const Realization &r, const Insertion &ins) {
    const bool odd = r.n() % 2 == 1;
    // Ancilla images of the Z-role and X-role operators.
    const CMat z_img = odd ? pauli::Z() : pauli::X();
    const CMat x_img = odd ? pauli::X() : pauli::Z();
    auto primed_a = [&](int i) {
        double t = reference_alice_angle(r.n(), i);
        return std::sin(t) * z_img + std::cos(t) * x_img;
    };
    auto primed_b = [&](int j) {
        double t = reference_bob_angle(r.n(), j);
        return std::sin(t) * z_img + std::cos(t) * x_img;
    };
    CMat id = pauli::I2();
    CMat op;
    switch (ins.kind) {
        case Insertion::Kind::identity:
            op = CMat::identity(4);
            break;
        case Insertion::Kind::XA:
            op = kron(x_img, id);
            break;
        case Insertion::Kind::XB:
            op = kron(id, x_img);
            break;
        case Insertion::Kind::ZA:
            op = kron(z_img, id);
            break;
        case Insertion::Kind::ZB:
            op = kron(id, z_img);
            break;
        case Insertion::Kind::alice:
            op = kron(primed_a(ins.i), id);
            break;
        case Insertion::Kind::bob:
            op = kron(id, primed_b(ins.j));
            break;
        case Insertion::Kind::joint:
            op = kron(primed_a(ins.i), primed_b(ins.j));
            break;
    }
    return op_apply(op, maximally_entangled(2));
}

SwapOutput apply_isometry(const Realization &r, const SwapObservables &s, const CMat &inserted, const CVec &target) {
    const size_t d = r.dim();
    const size_t sys = d * d;
    if (inserted.rows() != sys || inserted.cols() != sys || target.dim() != 4) {
        throw std::invalid_argument("apply_isometry: dimension mismatch");
    }
    SwapOutput out{};
    out.joint = isometry(s, op_apply(inserted, r.state()), d);
    out.joint_norm = vec_norm(out.joint);
    if (out.joint_norm == 0) {
        throw NumericError("apply_isometry: isometry output vanished");
    }

    // joint as a sys x 4 matrix M; M^dagger M carries the ancilla spectrum.
    CMat m(sys, 4);
    for (size_t k = 0; k < sys; k++) {
        for (size_t c = 0; c < 4; c++) {
            m(k, c) = out.joint[k * 4 + c];
        }
    }
    CMat gram = adjoint(m) * m;
    auto eig = hermitian_eig(gram);
    const CVec &v1 = eig.front().vector;
    out.junk_candidate = op_apply(m, v1);
    out.ancilla_vector = CVec(4);
    for (size_t c = 0; c < 4; c++) {
        out.ancilla_vector[c] = std::conj(v1[c]);
    }
    out.factorization_residual = vec_norm(out.joint - kron(out.junk_candidate, out.ancilla_vector));

    // Reduced ancilla density: rho[c][c'] = sum_k M[k][c] conj(M[k][c']).
    out.ancilla_state = CMat(4, 4);
    double norm2 = out.joint_norm * out.joint_norm;
    for (size_t c = 0; c < 4; c++) {
        for (size_t c2 = 0; c2 < 4; c2++) {
            out.ancilla_state(c, c2) = std::conj(gram(c, c2)) / norm2;
        }
    }
    CVec t = normalized(target);
    out.ancilla_fidelity = expectation(out.ancilla_state, t).real();

    CVec proj(sys);
    for (size_t k = 0; k < sys; k++) {
        cplx acc = 0;
        for (size_t c = 0; c < 4; c++) {
            acc += std::conj(t[c]) * m(k, c);
        }
        proj[k] = acc;
    }
    out.target_residual = vec_norm(out.joint - kron(proj, t));

    CVec chi = expected_junk(r, s);
    double denom = vec_norm(chi) * vec_norm(out.junk_candidate);
    out.junk_fidelity = denom == 0 ? 0.0 : std::abs(inner(chi, out.junk_candidate)) / denom;
    return out;
}

SwapOutput apply_isometry(const Realization &r, const SwapObservables &s, const Insertion &ins) {
    return apply_isometry(r, s, insertion_operator(r, s, ins), ancilla_target(r, ins));
}

}  // namespace chainbell

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

// aarch64 only. NEON is mandatory on that architecture, so no runtime probe.

#include <arm_neon.h>

#include "chainbell/kernels.h"

namespace chainbell::kernels {

namespace {

inline const double *dp(const cplx *p) {
    return reinterpret_cast<const double *>(p);
}

// One complex number per float64x2_t: [re, im].
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
    float64x2_t a_re = vdupq_laneq_f64(a, 0);
    float64x2_t a_im = vdupq_laneq_f64(a, 1);
    float64x2_t b_sw = vextq_f64(b, b, 1);
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vmulq_f64(a_re, b), vmulq_f64(a_im, sign), b_sw);
}

inline cplx to_cplx(float64x2_t v) {
    return {vgetq_lane_f64(v, 0), vgetq_lane_f64(v, 1)};
}

void gemm_neon(const cplx *a, const cplx *b, cplx *c, size_t m, size_t k, size_t n) {
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) {
            float64x2_t acc = vdupq_n_f64(0.0);
            for (size_t p = 0; p < k; p++) {
                acc = vaddq_f64(acc, cmul(vld1q_f64(dp(a + i * k + p)), vld1q_f64(dp(b + p * n + j))));
            }
            c[i * n + j] = to_cplx(acc);
        }
    }
}

void gemv_neon(const cplx *a, const cplx *x, cplx *y, size_t m, size_t n) {
    for (size_t i = 0; i < m; i++) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (size_t j = 0; j < n; j++) {
            acc = vaddq_f64(acc, cmul(vld1q_f64(dp(a + i * n + j)), vld1q_f64(dp(x + j))));
        }
        y[i] = to_cplx(acc);
    }
}

cplx dotc_neon(const cplx *u, const cplx *v, size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    const float64x2_t conj_sign = {1.0, -1.0};
    for (size_t k = 0; k < n; k++) {
        acc = vaddq_f64(acc, cmul(vmulq_f64(vld1q_f64(dp(u + k)), conj_sign), vld1q_f64(dp(v + k))));
    }
    return to_cplx(acc);
}

}  // namespace

const KernelTable *neon_table() {
    static const KernelTable table{Isa::neon, gemm_neon, gemv_neon, dotc_neon};
    return &table;
}

}  // namespace chainbell::kernels

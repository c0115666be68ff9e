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

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "chainbell/kernels.h"

namespace chainbell::kernels {

namespace {

// Two interleaved complex numbers per __m256d: [re0, im0, re1, im1].

inline __m256d cmul2(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0xF);
    __m256d b_sw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

inline __m128d cmul1(__m128d a, __m128d b) {
    __m128d a_re = _mm_movedup_pd(a);
    __m128d a_im = _mm_permute_pd(a, 0x3);
    __m128d b_sw = _mm_permute_pd(b, 0x1);
    return _mm_addsub_pd(_mm_mul_pd(a_re, b), _mm_mul_pd(a_im, b_sw));
}

inline const double *dp(const cplx *p) {
    return reinterpret_cast<const double *>(p);
}
inline double *dp(cplx *p) {
    return reinterpret_cast<double *>(p);
}

void gemm_avx2(const cplx *a, const cplx *b, cplx *c, size_t m, size_t k, size_t n) {
    size_t n2 = n & ~size_t{1};
    for (size_t i = 0; i < m; i++) {
        const cplx *arow = a + i * k;
        for (size_t j = 0; j < n2; j += 2) {
            __m256d acc = _mm256_setzero_pd();
            for (size_t p = 0; p < k; p++) {
                __m256d av = _mm256_broadcast_pd(reinterpret_cast<const __m128d *>(arow + p));
                __m256d bv = _mm256_loadu_pd(dp(b + p * n + j));
                acc = _mm256_add_pd(acc, cmul2(av, bv));
            }
            _mm256_storeu_pd(dp(c + i * n + j), acc);
        }
        if (n2 < n) {
            __m128d acc = _mm_setzero_pd();
            for (size_t p = 0; p < k; p++) {
                __m128d av = _mm_loadu_pd(dp(arow + p));
                __m128d bv = _mm_loadu_pd(dp(b + p * n + n2));
                acc = _mm_add_pd(acc, cmul1(av, bv));
            }
            _mm_storeu_pd(dp(c + i * n + n2), acc);
        }
    }
}

inline cplx hsum(__m256d acc) {
    __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

void gemv_avx2(const cplx *a, const cplx *x, cplx *y, size_t m, size_t n) {
    size_t n2 = n & ~size_t{1};
    for (size_t i = 0; i < m; i++) {
        const cplx *row = a + i * n;
        __m256d acc = _mm256_setzero_pd();
        for (size_t j = 0; j < n2; j += 2) {
            acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(dp(row + j)), _mm256_loadu_pd(dp(x + j))));
        }
        cplx r = hsum(acc);
        if (n2 < n) {
            alignas(16) double out[2];
            _mm_store_pd(out, cmul1(_mm_loadu_pd(dp(row + n2)), _mm_loadu_pd(dp(x + n2))));
            r += cplx{out[0], out[1]};
        }
        y[i] = r;
    }
}

cplx dotc_avx2(const cplx *u, const cplx *v, size_t n) {
    size_t n2 = n & ~size_t{1};
    __m256d acc = _mm256_setzero_pd();
    for (size_t k = 0; k < n2; k += 2) {
        __m256d uv = _mm256_loadu_pd(dp(u + k));
        __m256d vv = _mm256_loadu_pd(dp(v + k));
        __m256d u_re = _mm256_movedup_pd(uv);
        __m256d u_im = _mm256_permute_pd(uv, 0xF);
        __m256d v_sw = _mm256_permute_pd(vv, 0x5);
        acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(u_re, vv, _mm256_mul_pd(u_im, v_sw)));
    }
    cplx r = hsum(acc);
    if (n2 < n) {
        r += std::conj(u[n2]) * v[n2];
    }
    return r;
}

}  // namespace

const KernelTable *avx2_table() {
    static const KernelTable table{Isa::avx2, gemm_avx2, gemv_avx2, dotc_avx2};
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &table : nullptr;
}

}  // namespace chainbell::kernels

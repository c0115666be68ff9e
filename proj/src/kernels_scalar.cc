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

#include "chainbell/kernels.h"

namespace chainbell::kernels {

namespace {

// Plain loops on split real/imag parts; avoids the NaN-checking path of
// std::complex operator*.
inline void mul_acc(double ar, double ai, const cplx &b, double &cr, double &ci) {
    cr += ar * b.real() - ai * b.imag();
    ci += ar * b.imag() + ai * b.real();
}

void gemm_scalar(const cplx *a, const cplx *b, cplx *c, size_t m, size_t k, size_t n) {
    for (size_t i = 0; i < m * n; i++) {
        c[i] = 0;
    }
    for (size_t i = 0; i < m; i++) {
        cplx *crow = c + i * n;
        for (size_t p = 0; p < k; p++) {
            double ar = a[i * k + p].real();
            double ai = a[i * k + p].imag();
            if (ar == 0 && ai == 0) {
                continue;
            }
            const cplx *brow = b + p * n;
            for (size_t j = 0; j < n; j++) {
                double cr = crow[j].real();
                double ci = crow[j].imag();
                mul_acc(ar, ai, brow[j], cr, ci);
                crow[j] = {cr, ci};
            }
        }
    }
}

void gemv_scalar(const cplx *a, const cplx *x, cplx *y, size_t m, size_t n) {
    for (size_t i = 0; i < m; i++) {
        double cr = 0;
        double ci = 0;
        const cplx *row = a + i * n;
        for (size_t j = 0; j < n; j++) {
            mul_acc(row[j].real(), row[j].imag(), x[j], cr, ci);
        }
        y[i] = {cr, ci};
    }
}

cplx dotc_scalar(const cplx *u, const cplx *v, size_t n) {
    double cr = 0;
    double ci = 0;
    for (size_t k = 0; k < n; k++) {
        mul_acc(u[k].real(), -u[k].imag(), v[k], cr, ci);
    }
    return {cr, ci};
}

}  // namespace

const KernelTable &scalar_table() {
    static const KernelTable table{Isa::scalar, gemm_scalar, gemv_scalar, dotc_scalar};
    return table;
}

}  // namespace chainbell::kernels

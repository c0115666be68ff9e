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

#ifndef CHAINBELL_KERNELS_H
#define CHAINBELL_KERNELS_H

#include <complex>
#include <cstddef>

namespace chainbell::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

const char *isa_name(Isa isa);

/// Row-major complex kernels. All pointers address contiguous storage.
struct KernelTable {
    Isa isa;
    /// c[m x n] = a[m x k] * b[k x n]. c must not alias a or b.
    void (*gemm)(const cplx *a, const cplx *b, cplx *c, size_t m, size_t k, size_t n);
    /// y[m] = a[m x n] * x[n]. y must not alias x.
    void (*gemv)(const cplx *a, const cplx *x, cplx *y, size_t m, size_t n);
    /// sum_k conj(u[k]) * v[k].
    cplx (*dotc)(const cplx *u, const cplx *v, size_t n);
};

const KernelTable &scalar_table();

/// Null when the variant is not compiled in or the CPU lacks support.
const KernelTable *avx2_table();
const KernelTable *neon_table();

/// The table used by qmath. Chosen once from CPU features; the environment
/// variable CHAINBELL_FORCE_SCALAR=1 pins the scalar path.
const KernelTable &active();

/// Overrides the active table. Returns false if the ISA is unavailable.
bool select(Isa isa);

}  // namespace chainbell::kernels

#endif

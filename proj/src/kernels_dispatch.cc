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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "chainbell/kernels.h"

namespace chainbell::kernels {

#ifndef CHAINBELL_HAVE_AVX2
const KernelTable *avx2_table() {
    return nullptr;
}
#endif

#ifndef CHAINBELL_HAVE_NEON
const KernelTable *neon_table() {
    return nullptr;
}
#endif

const char *isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

namespace {

const KernelTable *detect() {
    const char *force = std::getenv("CHAINBELL_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "1") == 0) {
        return &scalar_table();
    }
    if (const KernelTable *t = avx2_table()) {
        return t;
    }
    if (const KernelTable *t = neon_table()) {
        return t;
    }
    return &scalar_table();
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> table{detect()};
    return table;
}

}  // namespace

const KernelTable &active() {
    return *current().load(std::memory_order_acquire);
}

bool select(Isa isa) {
    const KernelTable *t = nullptr;
    switch (isa) {
        case Isa::scalar:
            t = &scalar_table();
            break;
        case Isa::avx2:
            t = avx2_table();
            break;
        case Isa::neon:
            t = neon_table();
            break;
    }
    if (t == nullptr) {
        return false;
    }
    current().store(t, std::memory_order_release);
    return true;
}

}  // namespace chainbell::kernels

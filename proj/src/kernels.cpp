// Copyright 2026 The smzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smzi/kernels.hpp"

#include <cstdlib>

namespace smzi::kernels {
namespace {

const Ops* detect() {
    if (const Ops* ops = avx2_ops()) {
        return ops;
    }
    if (const Ops* ops = neon_ops()) {
        return ops;
    }
    return &scalar_ops();
}

const Ops* lookup(std::string_view name) {
    if (name == "scalar") {
        return &scalar_ops();
    }
    if (name == "avx2") {
        return avx2_ops();
    }
    if (name == "neon") {
        return neon_ops();
    }
    if (name == "auto") {
        return detect();
    }
    return nullptr;
}

const Ops*& current() {
    static const Ops* ops = [] {
        if (const char* env = std::getenv("SMZI_KERNEL")) {
            if (const Ops* forced = lookup(env)) {
                return forced;
            }
        }
        return detect();
    }();
    return ops;
}

} // namespace

const Ops& active() { return *current(); }

bool select(std::string_view name) {
    const Ops* ops = lookup(name);
    if (ops == nullptr) {
        return false;
    }
    current() = ops;
    return true;
}

std::vector<const Ops*> all_available() {
    std::vector<const Ops*> out = {&scalar_ops()};
    if (const Ops* ops = avx2_ops()) {
        out.push_back(ops);
    }
    if (const Ops* ops = neon_ops()) {
        out.push_back(ops);
    }
    return out;
}

} // namespace smzi::kernels

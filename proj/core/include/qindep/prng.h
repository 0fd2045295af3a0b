// Copyright 2026 The qindep Authors
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

#ifndef QINDEP_PRNG_H
#define QINDEP_PRNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace qindep {

/// Seeded generator with a platform-independent output sequence.
///
/// The raw engine is std::mt19937_64, whose sequence is fixed by the C++
/// standard. Doubles are formed from the top 53 bits of each draw, so no
/// library distribution (whose algorithm is implementation-defined) is used.
class Prng {
   public:
    static constexpr std::string_view kName = "mt19937_64+top53";

    explicit Prng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    /// Standard normal via Box-Muller; consumes two draws.
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace qindep

#endif

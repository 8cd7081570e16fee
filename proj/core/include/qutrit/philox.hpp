// Copyright 2026 The qutrit Authors
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

#ifndef QUTRIT_PHILOX_HPP
#define QUTRIT_PHILOX_HPP

#include <array>
#include <cstdint>

namespace qutrit {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Output is a pure function of (counter, key): no state, no ordering dependence.
class Philox4x32 {
   public:
    using Counter = std::array<uint32_t, 4>;
    using Key = std::array<uint32_t, 2>;

    static constexpr Counter generate(Counter counter, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            uint64_t p0 = uint64_t{kMul0} * counter[0];
            uint64_t p1 = uint64_t{kMul1} * counter[2];
            counter = {
                static_cast<uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
                static_cast<uint32_t>(p1),
                static_cast<uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
                static_cast<uint32_t>(p0),
            };
        }
        return counter;
    }

    /// Uniform double in [0, 1) from the first 64 output bits (53 used).
    static constexpr double uniform(Counter counter, Key key) {
        Counter out = generate(counter, key);
        uint64_t bits = (uint64_t{out[0]} << 32) | out[1];
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

   private:
    static constexpr uint32_t kMul0 = 0xD2511F53;
    static constexpr uint32_t kMul1 = 0xCD9E8D57;
    static constexpr uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr uint32_t kWeyl1 = 0xBB67AE85;
};

}  // namespace qutrit

#endif  // QUTRIT_PHILOX_HPP

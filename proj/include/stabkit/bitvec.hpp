// Copyright 2026 The stabkit authors
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

#ifndef STABKIT_BITVEC_HPP
#define STABKIT_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stabkit {

/// Number of 64-bit words needed to hold n bits.
constexpr size_t words_for_bits(size_t n) {
    return (n + 63) / 64;
}

/// Mask selecting the live bits of the last word of an n-bit vector
/// (all ones when n is a multiple of 64).
constexpr uint64_t tail_mask(size_t n) {
    size_t rem = n % 64;
    return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

/// A packed vector of bits. Padding bits in the trailing word are kept zero.
struct BitVec {
    size_t size = 0;
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(size_t n) : size(n), words(words_for_bits(n), 0) {}

    bool get(size_t i) const {
        return (words[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            words[i >> 6] |= m;
        } else {
            words[i >> 6] &= ~m;
        }
    }
    size_t count() const {
        size_t c = 0;
        for (uint64_t w : words) {
            c += std::popcount(w);
        }
        return c;
    }
    bool operator==(const BitVec &other) const = default;
};

}  // namespace stabkit

#endif

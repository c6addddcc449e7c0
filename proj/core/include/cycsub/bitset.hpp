// Copyright 2026 The cycsub Authors
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

#ifndef CYCSUB_BITSET_HPP
#define CYCSUB_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>

namespace cycsub {

/// Fixed-capacity bitset over vertex ids 0..Words*64-1, used for adjacency
/// rows and vertex-set keys in the engine hot loops. Words == 1 covers every
/// workload the harness runs; Words == 4 extends the engine to 256 vertices.
template <int Words>
struct SmallBitset {
    static_assert(Words >= 1);
    std::array<std::uint64_t, Words> w{};

    static constexpr int capacity() { return Words * 64; }

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    bool none() const {
        std::uint64_t acc = 0;
        for (int k = 0; k < Words; ++k) acc |= w[k];
        return acc == 0;
    }

    int count() const {
        int c = 0;
        for (int k = 0; k < Words; ++k) c += std::popcount(w[k]);
        return c;
    }

    /// True iff every bit of `sub` is also set in *this.
    bool contains_all(const SmallBitset& sub) const {
        for (int k = 0; k < Words; ++k)
            if ((sub.w[k] & ~w[k]) != 0) return false;
        return true;
    }

    bool intersects(const SmallBitset& o) const {
        for (int k = 0; k < Words; ++k)
            if ((w[k] & o.w[k]) != 0) return true;
        return false;
    }

    int lowest() const {
        for (int k = 0; k < Words; ++k)
            if (w[k] != 0) return k * 64 + std::countr_zero(w[k]);
        return -1;
    }

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each_bit(F&& f) const {
        for (int k = 0; k < Words; ++k) {
            std::uint64_t word = w[k];
            while (word != 0) {
                f(k * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    friend SmallBitset operator&(SmallBitset a, const SmallBitset& b) {
        for (int k = 0; k < Words; ++k) a.w[k] &= b.w[k];
        return a;
    }
    friend SmallBitset operator|(SmallBitset a, const SmallBitset& b) {
        for (int k = 0; k < Words; ++k) a.w[k] |= b.w[k];
        return a;
    }
    friend SmallBitset operator^(SmallBitset a, const SmallBitset& b) {
        for (int k = 0; k < Words; ++k) a.w[k] ^= b.w[k];
        return a;
    }
    SmallBitset and_not(const SmallBitset& b) const {
        SmallBitset r = *this;
        for (int k = 0; k < Words; ++k) r.w[k] &= ~b.w[k];
        return r;
    }

    friend bool operator==(const SmallBitset& a, const SmallBitset& b) {
        return a.w == b.w;
    }
    friend bool operator!=(const SmallBitset& a, const SmallBitset& b) {
        return !(a == b);
    }
    // Numeric order, highest word first. Any total order works for the
    // engine's sort-based dedup; output ordering is canonicalized separately.
    friend bool operator<(const SmallBitset& a, const SmallBitset& b) {
        for (int k = Words - 1; k >= 0; --k) {
            if (a.w[k] != b.w[k]) return a.w[k] < b.w[k];
        }
        return false;
    }
};

}  // namespace cycsub

#endif  // CYCSUB_BITSET_HPP

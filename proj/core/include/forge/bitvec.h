// Copyright 2026 The forge authors
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

#ifndef FORGE_BITVEC_H
#define FORGE_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace forge {

/// Fixed-length vector over GF(2), packed into 64 bit words.
///
/// This is the workhorse behind Pauli strings, tableau elimination and
/// adjacency rows. All mutating operations keep the unused tail bits of the
/// last word zero, so whole-word comparisons and popcounts stay valid.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    size_t size() const {
        return num_bits_;
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }

    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }

    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    /// self ^= other. Sizes must agree.
    BitVec &operator^=(const BitVec &other) {
        check_same_size(other);
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }

    /// popcount(self & other), used for symplectic products.
    size_t and_popcount(const BitVec &other) const {
        check_same_size(other);
        size_t total = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            total += std::popcount(words_[w] & other.words_[w]);
        }
        return total;
    }

    /// Parity of popcount(self & other).
    bool parity_and(const BitVec &other) const {
        return and_popcount(other) & 1;
    }

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    /// Index of the lowest set bit, or size() if none.
    size_t lowest_set_bit() const {
        for (size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return (w << 6) + std::countr_zero(words_[w]);
            }
        }
        return num_bits_;
    }

    bool operator==(const BitVec &other) const = default;

   private:
    void check_same_size(const BitVec &other) const {
        if (num_bits_ != other.num_bits_) {
            throw std::invalid_argument("BitVec size mismatch.");
        }
    }

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace forge

#endif

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "frob/core.hpp"

namespace frob::detail {

// Set of (value, level) pairs with 0 <= value <= max_value. Dense bitset for
// small tables, hash set once the dense table would exceed 2^27 bits.
class PairMemo {
public:
    static constexpr std::size_t dense_limit_bits = std::size_t{1} << 27;

    PairMemo(integer max_value, std::size_t levels) : stride_(static_cast<std::size_t>(max_value) + 1) {
        if (levels != 0 && stride_ <= dense_limit_bits / levels)
            bits_.assign((stride_ * levels + 63) / 64, 0);
        else
            sparse_ = levels != 0;
    }

    bool contains(integer value, std::size_t level) const {
        const std::size_t idx = level * stride_ + static_cast<std::size_t>(value);
        if (sparse_)
            return seen_.contains(idx);
        return (bits_[idx / 64] >> (idx % 64)) & 1U;
    }

    void insert(integer value, std::size_t level) {
        const std::size_t idx = level * stride_ + static_cast<std::size_t>(value);
        if (sparse_)
            seen_.insert(idx);
        else
            bits_[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }

private:
    std::size_t stride_;
    bool sparse_ = false;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::size_t> seen_;
};

} // namespace frob::detail

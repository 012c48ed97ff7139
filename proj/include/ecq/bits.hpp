#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ecq {

/// Bit i is the assignment of binary variable x_i.
using Bitstring = std::vector<std::uint8_t>;

inline Bitstring bits_from_mask(std::uint64_t mask, int n) {
    Bitstring b(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return b;
}

inline std::uint64_t mask_from_bits(const Bitstring& b) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < b.size() && i < 64; ++i)
        if (b[i]) m |= (1ULL << i);
    return m;
}

inline Bitstring bits_from_nodes(const std::vector<int>& nodes, int n) {
    Bitstring b(static_cast<std::size_t>(n), 0);
    for (int v : nodes) b[static_cast<std::size_t>(v)] = 1;
    return b;
}

inline std::vector<int> ones_of(const Bitstring& b) {
    std::vector<int> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) out.push_back(static_cast<int>(i));
    return out;
}

inline int weight_of(const Bitstring& b) {
    int w = 0;
    for (auto v : b) w += v != 0;
    return w;
}

/// Ordering used to break energy ties in sample sets: ascending numeric value
/// of the bitstring with x_0 as the least significant bit.
inline bool bits_value_less(const Bitstring& a, const Bitstring& b) {
    std::size_t n = a.size() > b.size() ? a.size() : b.size();
    for (std::size_t i = n; i-- > 0;) {
        std::uint8_t av = i < a.size() ? a[i] : 0;
        std::uint8_t bv = i < b.size() ? b[i] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

/// Rendered as x_0 x_1 ... x_{n-1}.
inline std::string bits_to_string(const Bitstring& b) {
    std::string s;
    s.reserve(b.size());
    for (auto v : b) s.push_back(v ? '1' : '0');
    return s;
}

}  // namespace ecq

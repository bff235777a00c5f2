#ifndef KNESER_BITS_HPP
#define KNESER_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kneser {

// Ground sets live in [n] with n <= 63; subsets are machine words,
// element i (1-based) <-> bit i-1.
using Mask = std::uint64_t;

constexpr int max_ground = 63;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1; }
inline bool has_element(Mask m, int e) { return (m >> (e - 1)) & 1; }
inline Mask element(int e) { return Mask{1} << (e - 1); }
inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int lowest_element(Mask m) { return std::countr_zero(m) + 1; }

template <typename F>
void for_each_element(Mask m, F&& f) {
    while (m) {
        f(std::countr_zero(m) + 1);
        m &= m - 1;
    }
}

inline std::vector<int> mask_to_elements(Mask m) {
    std::vector<int> out;
    for_each_element(m, [&](int e) { out.push_back(e); });
    return out;
}

inline Mask elements_to_mask(const std::vector<int>& elems, int n) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw std::invalid_argument("element out of range [1,n]");
        m |= element(e);
    }
    return m;
}

}  // namespace kneser

#endif

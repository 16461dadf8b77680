#ifndef RAAGCOH_VERTEX_SET_HPP
#define RAAGCOH_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace raagcoh {

// Hard cap for the whole toolkit: vertex subsets are encoded as 64-bit
// masks and double as memoisation keys.
inline constexpr int kMaxVertices = 64;

// Subset of vertex indices in [0, 64), encoded as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr VertexSet single(int v) {
        return from_bits(std::uint64_t{1} << v);
    }

    // {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        if (n <= 0) return {};
        if (n >= 64) return from_bits(~std::uint64_t{0});
        return from_bits((std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Least vertex index, or -1 if empty.
    constexpr int least() const {
        return bits_ ? std::countr_zero(bits_) : -1;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::uint64_t x = bits_; x; x &= x - 1) fn(std::countr_zero(x));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Canonical order on subsets: lexicographic on the sorted index lists,
    // with a strict prefix ordered first.  Used everywhere a list of
    // subsets is emitted.
    static bool lex_less(VertexSet a, VertexSet b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x && y) {
            int i = std::countr_zero(x);
            int j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

private:
    std::uint64_t bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const {
        return std::hash<std::uint64_t>()(s.bits());
    }
};

} // namespace raagcoh

#endif

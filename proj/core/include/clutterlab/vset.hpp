#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace clutterlab {

/// Vertex subset over a fixed universe of at most 64 indexed vertices.
/// Stored as a bit mask; index i is vertex i of the owning universe.
class VSet {
public:
    constexpr VSet() = default;
    constexpr explicit VSet(std::uint64_t bits) : bits_(bits) {}

    static VSet of(std::initializer_list<int> indices) {
        VSet s;
        for (int i : indices) s.add(i);
        return s;
    }
    static constexpr VSet full(int n) {
        return VSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VSet single(int i) { return VSet(std::uint64_t{1} << i); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1; }

    void add(int i) { bits_ |= std::uint64_t{1} << i; }
    void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr VSet with(int i) const { return VSet(bits_ | (std::uint64_t{1} << i)); }
    constexpr VSet without(int i) const { return VSet(bits_ & ~(std::uint64_t{1} << i)); }

    constexpr bool subset_of(VSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(VSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VSet operator|(VSet o) const { return VSet(bits_ | o.bits_); }
    constexpr VSet operator&(VSet o) const { return VSet(bits_ & o.bits_); }
    constexpr VSet operator-(VSet o) const { return VSet(bits_ & ~o.bits_); }
    VSet& operator|=(VSet o) { bits_ |= o.bits_; return *this; }
    VSet& operator&=(VSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const VSet&) const = default;

    /// Complement within a universe of size n.
    constexpr VSet complement(int n) const { return VSet(~bits_ & full(n).bits_); }

    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// Lexicographic order on the sorted index lists ({0} < {0,1} < {0,2} < {1}).
    static bool lex_less(VSet a, VSet b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x && y) {
            int i = std::countr_zero(x), j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace clutterlab

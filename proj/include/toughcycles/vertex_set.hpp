#ifndef TOUGHCYCLES_VERTEX_SET_HPP
#define TOUGHCYCLES_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>

namespace toughcycles {

using Vertex = int;

// Subset of vertex indices 0..63, one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) { return VertexSet(bit(v)); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(Vertex v) const { return (bits_ & bit(v)) != 0; }
    constexpr VertexSet& insert(Vertex v) {
        bits_ |= bit(v);
        return *this;
    }
    constexpr VertexSet& erase(Vertex v) {
        bits_ &= ~bit(v);
        return *this;
    }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr Vertex min() const {
        assert(bits_ != 0);
        return std::countr_zero(bits_);
    }

    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    // Member iteration in increasing vertex order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static constexpr std::uint64_t bit(Vertex v) {
        assert(v >= 0 && v < 64);
        return std::uint64_t{1} << v;
    }

    std::uint64_t bits_ = 0;
};

}  // namespace toughcycles

#endif

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fvst {

// Set of vertex ids in 0..63, backed by one machine word. Everything the
// structural algorithms do (neighborhood intersections, layer bookkeeping,
// domination checks) reduces to word operations on these.
class VSet {
public:
    static constexpr int kMax = 64;

    constexpr VSet() = default;
    constexpr explicit VSet(uint64_t bits) : bits_(bits) {}

    static constexpr VSet all(int n) {
        return n <= 0 ? VSet{} : VSet{~uint64_t{0} >> (kMax - n)};
    }

    static constexpr VSet single(int v) { return VSet{uint64_t{1} << v}; }

    static VSet of(std::initializer_list<int> vs) {
        VSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return bits_ >> v & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }

    void add(int v) { bits_ |= uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(uint64_t{1} << v); }

    // Lowest vertex id; only valid on a non-empty set.
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr VSet operator|(VSet o) const { return VSet{bits_ | o.bits_}; }
    constexpr VSet operator&(VSet o) const { return VSet{bits_ & o.bits_}; }
    constexpr VSet operator-(VSet o) const { return VSet{bits_ & ~o.bits_}; }
    VSet& operator|=(VSet o) { bits_ |= o.bits_; return *this; }
    VSet& operator&=(VSet o) { bits_ &= o.bits_; return *this; }
    VSet& operator-=(VSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VSet&) const = default;

    constexpr bool subset_of(VSet o) const { return (bits_ & ~o.bits_) == 0; }

    class iterator {
    public:
        constexpr explicit iterator(uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        uint64_t rest_;
    };

    iterator begin() const { return iterator{bits_}; }
    iterator end() const { return iterator{0}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    uint64_t bits_ = 0;
};

}  // namespace fvst

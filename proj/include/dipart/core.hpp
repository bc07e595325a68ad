#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dipart {

// Global vertex bound. All set types are 64-bit masks sized to it.
inline constexpr int kMaxVertices = 64;

/// Thrown when a runtime check of a structural invariant fails. The message
/// names the rule or fact whose guarantee was violated.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

/// Set of vertices 0..63 backed by a single machine word. Ordering is by
/// numeric mask value; that order is the tie-breaker used everywhere a
/// "lexicographically least" set is required.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet single(int v) { return VertexSet(std::uint64_t(1) << v); }

    static VertexSet range(int n) {
        return n >= 64 ? VertexSet(~std::uint64_t(0)) : VertexSet((std::uint64_t(1) << n) - 1);
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet from_list(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    void add(int v) { bits_ |= std::uint64_t(1) << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t(1) << v); }

    /// Least member; set must be nonempty.
    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> to_list() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

    // Range-for over members in increasing order.
    class iterator {
    public:
        explicit iterator(std::uint64_t b) : b_(b) {}
        int operator*() const { return std::countr_zero(b_); }
        iterator& operator++() { b_ &= b_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return b_ != o.b_; }
    private:
        std::uint64_t b_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace dipart

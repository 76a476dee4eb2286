#ifndef IMSETS_VERTEX_SET_HPP
#define IMSETS_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace imsets {

inline constexpr int kMaxVertices = 32;

/// A subset of the vertex universe, stored as a bitmask over vertex indices.
///
/// The integer encoding doubles as the coordinate of the set in an imset, and
/// as the canonical order used for deterministic output.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint32_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint32_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint32_t{1} << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }

 private:
  std::uint32_t bits_ = 0;
};

/// Calls f(subset) for every subset of s, including the empty set and s.
template <typename F>
void for_each_subset(VertexSet s, F&& f) {
  std::uint32_t sub = 0;
  const std::uint32_t mask = s.bits();
  while (true) {
    f(VertexSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace imsets

template <>
struct std::hash<imsets::VertexSet> {
  std::size_t operator()(imsets::VertexSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

#endif  // IMSETS_VERTEX_SET_HPP

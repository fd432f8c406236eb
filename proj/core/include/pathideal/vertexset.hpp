#ifndef PATHIDEAL_VERTEXSET_HPP
#define PATHIDEAL_VERTEXSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace pathideal {

/// Subset of the vertices 0..n-1 of a graph, n <= 63, as one machine word.
/// Doubles as the support of a squarefree monomial over the same universe.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  /// The full set {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Smallest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool operator<(VertexSet o) const { return bits_ < o.bits_; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// Iteration over set bits: `for (int v : set) ...`
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace pathideal

#endif

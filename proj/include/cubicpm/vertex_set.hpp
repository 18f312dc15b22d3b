#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cubicpm {

using VertexId = int;
using EdgeId = int;

/// Set of vertex ids below 64, stored as a bitmask.
///
/// Every algorithm that works on cuts, residual graphs or vertex deletions
/// uses this type, which caps those algorithms at 64 vertices. The exhaustive
/// parts of the library are only meant for desk-scale graphs anyway.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) insert(v);
  }

  static VertexSet from(const std::vector<VertexId>& vs) {
    VertexSet s;
    for (VertexId v : vs) s.insert(v);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Lowest element; the set must be non-empty.
  constexpr VertexId front() const { return std::countr_zero(bits_); }

  constexpr VertexSet complement(int n) const { return VertexSet(all(n).bits_ & ~bits_); }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<VertexId>(std::countr_zero(b)));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace cubicpm

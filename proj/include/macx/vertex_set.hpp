#ifndef MACX_VERTEX_SET_HPP
#define MACX_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace macx {

/// Largest vertex count a VertexSet can address (one machine word).
inline constexpr int kMaxVertices = 63;

/**
 * Subset of [m] = {1, ..., m} packed into one 64-bit word.
 *
 * Vertex v occupies bit v-1. The numeric value of the word gives the
 * canonical order used throughout the library (face lists, cell indices,
 * Hochster tables).
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit(v);
  }

  static VertexSet from_vertices(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.bits_ |= bit(v);
    return s;
  }

  /// [m] itself.
  static constexpr VertexSet full(int m) {
    return VertexSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Largest vertex present, 0 for the empty set.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr VertexSet complement(int m) const { return VertexSet(full(m).bits_ & ~bits_); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  /// Vertices in ascending order (1-indexed).
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Number of elements of this set strictly smaller than v.
  constexpr int count_below(int v) const { return std::popcount(bits_ & (bit(v) - 1)); }

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  std::uint64_t bits_ = 0;
};

/// Orders by cardinality, then by numeric value: the canonical face order.
struct ByCardinality {
  bool operator()(VertexSet a, VertexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

/**
 * Packs the bits of `value` selected by `mask` into the low bits of the
 * result, preserving order (software PEXT). Used to re-index a subset of
 * ω onto [|ω|].
 */
constexpr std::uint64_t compress_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
    if (value & (m & -m)) out |= std::uint64_t{1} << k;
  }
  return out;
}

/// Inverse of compress_bits: scatters the low bits of `value` onto `mask`.
constexpr std::uint64_t expand_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
    if (value & (std::uint64_t{1} << k)) out |= (m & -m);
  }
  return out;
}

inline VertexSet compress(VertexSet s, VertexSet onto) {
  return VertexSet(compress_bits(s.bits(), onto.bits()));
}

}  // namespace macx

#endif  // MACX_VERTEX_SET_HPP

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cnc {

/// A subset of a ground set with at most 64 points, stored as one machine
/// word: bit i is point i. Values are plain and cheap to copy; carrier
/// checks happen at operation boundaries, not here.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset single(std::size_t i) {
    return Subset(std::uint64_t{1} << i);
  }

  static Subset of(std::initializer_list<std::size_t> indices) {
    std::uint64_t b = 0;
    for (std::size_t i : indices) b |= std::uint64_t{1} << i;
    return Subset(b);
  }

  /// The full subset {0, ..., n-1}.
  static constexpr Subset full(std::size_t n) {
    return Subset(n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(std::size_t i) const {
    return (bits_ >> i) & 1u;
  }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  /// Index of the lowest point; undefined on the empty set.
  std::size_t lowest() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1)
      f(static_cast<std::size_t>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// ascending index sequences. All families returned by the library are
/// sorted this way for reproducible output.
inline bool canonical_less(Subset a, Subset b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  std::uint64_t x = a.bits(), y = b.bits();
  while (x && y) {
    int ix = std::countr_zero(x), iy = std::countr_zero(y);
    if (ix != iy) return ix < iy;
    x &= x - 1;
    y &= y - 1;
  }
  return y != 0;
}

void canonical_sort(std::vector<Subset>& family);

/// Merges a family of sets into its overlap blocks: the finest partition of
/// the union such that every piece lies inside one block. Blocks come back
/// in canonical order.
std::vector<Subset> overlap_blocks(const std::vector<Subset>& pieces);

}  // namespace cnc

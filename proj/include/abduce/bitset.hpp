// Fixed-width bitmask over up to 128 ground objects (assertions, literals, ...).
// Ground contexts index their elements once; all subset algebra runs on these masks.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace abduce {

struct Mask {
  std::uint64_t lo = 0, hi = 0;

  static constexpr int capacity = 128;

  static Mask single(int i) {
    Mask m;
    m.set(i);
    return m;
  }
  static Mask first_n(int n) {
    Mask m;
    if (n >= 64) {
      m.lo = ~0ULL;
      m.hi = (n >= 128) ? ~0ULL : (n == 64 ? 0 : (~0ULL >> (128 - n)));
    } else {
      m.lo = (n <= 0) ? 0 : (~0ULL >> (64 - n));
    }
    return m;
  }

  void set(int i) { (i < 64 ? lo : hi) |= 1ULL << (i & 63); }
  void reset(int i) { (i < 64 ? lo : hi) &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1; }

  bool empty() const { return lo == 0 && hi == 0; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }

  bool subset_of(const Mask& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
  bool intersects(const Mask& o) const { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }

  friend Mask operator|(Mask a, const Mask& b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend Mask operator&(Mask a, const Mask& b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend Mask operator-(Mask a, const Mask& b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }
  Mask& operator|=(const Mask& o) { lo |= o.lo; hi |= o.hi; return *this; }
  Mask& operator&=(const Mask& o) { lo &= o.lo; hi &= o.hi; return *this; }
  bool operator==(const Mask&) const = default;
  // Lexicographic-from-low-bits order; used only for deterministic containers.
  bool operator<(const Mask& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }

  int lowest_bit() const {
    if (lo) return std::countr_zero(lo);
    if (hi) return 64 + std::countr_zero(hi);
    return -1;
  }

  // Calls fn(i) for each set bit, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t w = lo; w;) {
      int i = std::countr_zero(w);
      fn(i);
      w &= w - 1;
    }
    for (std::uint64_t w = hi; w;) {
      int i = std::countr_zero(w);
      fn(64 + i);
      w &= w - 1;
    }
  }
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::uint64_t x = m.lo * 0x9E3779B97F4A7C15ULL ^ (m.hi + 0x9E3779B97F4A7C15ULL);
    x ^= x >> 32;
    return static_cast<std::size_t>(x * 0xBF58476D1CE4E5B9ULL);
  }
};

}  // namespace abduce

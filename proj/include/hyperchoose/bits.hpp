#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchoose {

using Vertex = int;
using Color = int;

/// Vertex subsets are single machine words; every instance is capped at 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(int i) { return VertexMask{1} << i; }

constexpr int popcount(VertexMask m) { return std::popcount(m); }

/// Mask with the low `n` bits set.
constexpr VertexMask low_bits(int n) {
  return n >= 64 ? ~VertexMask{0} : (bit(n) - 1);
}

inline std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline VertexMask to_mask(const std::vector<Vertex>& vs, int n) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= n)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(n - 1));
    m |= bit(v);
  }
  return m;
}

inline void check_vertex_cap(long long n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw std::length_error("vertex count " + std::to_string(n) +
                            " exceeds the 64-vertex cap");
}

/// Binomial coefficient; exact for the small arguments used here.
constexpr std::uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Calls fn(mask) for every r-subset of {0..n-1}, in increasing numeric order
/// of the mask (Gosper's hack). fn returns false to stop early.
template <class Fn>
bool for_each_subset_of_size(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return true;
  if (r == 0) return fn(VertexMask{0});
  VertexMask s = low_bits(r);
  const VertexMask limit = (n == 64) ? 0 : bit(n);
  while (true) {
    if (!fn(s)) return false;
    const VertexMask c = s & (~s + 1);
    const VertexMask rr = s + c;
    if (rr == 0) return true;  // overflowed past bit 63
    s = (((rr ^ s) >> 2) / c) | rr;
    if (n < 64 && (s & ~(limit - 1))) return true;
  }
}

}  // namespace hyperchoose

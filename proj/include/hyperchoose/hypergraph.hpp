#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hyperchoose/bits.hpp"

namespace hyperchoose {

// ---------------------------------------------------------------------------
// PartiteShape
// ---------------------------------------------------------------------------

/// Part sizes (p1, ..., pk) together with the edge size r. Describes the
/// r-complete k-partite hypergraph whose edges are the r-subsets that are not
/// contained in a single part.
class PartiteShape {
 public:
  PartiteShape(int r, std::vector<int> parts) : r_(r), parts_(std::move(parts)) {
    if (r_ < 2) throw std::invalid_argument("edge size r must be at least 2, got " + std::to_string(r_));
    if (parts_.empty()) throw std::invalid_argument("a shape needs at least one part");
    long long n = 0;
    for (int p : parts_) {
      if (p <= 0) throw std::invalid_argument("part sizes must be positive, got " + std::to_string(p));
      n += p;
    }
    check_vertex_cap(n);
  }

  int uniformity() const { return r_; }
  const std::vector<int>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int vertex_count() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// At most one part smaller than r-1 and parts in non-increasing order.
  bool is_normalized() const {
    const auto small = std::count_if(parts_.begin(), parts_.end(), [&](int p) { return p < r_ - 1; });
    return small <= 1 && std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
  }

  friend bool operator==(const PartiteShape&, const PartiteShape&) = default;

 private:
  int r_;
  std::vector<int> parts_;
};

/// Merges parts smaller than r-1 pairwise (move one vertex from one small part
/// into another) until at most one small part is left, drops emptied parts and
/// sorts the result non-increasingly. The hypergraph is unchanged up to
/// isomorphism since no r-subset fits inside a part of size < r.
inline PartiteShape normalize_shape(const PartiteShape& shape) {
  const int r = shape.uniformity();
  std::vector<int> parts = shape.parts();
  while (true) {
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] > 0 && parts[i] < r - 1) small.push_back(i);
    if (small.size() < 2) break;
    // Grow the largest small part at the expense of the smallest one.
    const auto by_size = [&](std::size_t a, std::size_t b) {
      return parts[a] != parts[b] ? parts[a] < parts[b] : a < b;
    };
    std::sort(small.begin(), small.end(), by_size);
    ++parts[small.back()];
    --parts[small.front()];
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return PartiteShape(r, std::move(parts));
}

// ---------------------------------------------------------------------------
// SimpleGraph
// ---------------------------------------------------------------------------

class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0) : adjacency_(static_cast<std::size_t>(n), 0) { check_vertex_cap(n); }

  SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(Vertex u, Vertex v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::out_of_range("graph edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)] |= bit(v);
    adjacency_[static_cast<std::size_t>(v)] |= bit(u);
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  VertexMask neighbours(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  bool adjacent(Vertex u, Vertex v) const { return (neighbours(u) & bit(v)) != 0; }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : to_vertices(neighbours(u) & ~low_bits(u + 1))) out.emplace_back(u, v);
    return out;
  }

 private:
  std::vector<VertexMask> adjacency_;
};

// ---------------------------------------------------------------------------
// UniformHypergraph
// ---------------------------------------------------------------------------

/// An r-uniform hypergraph on vertices 0..n-1. Either stores its edges
/// explicitly (sorted, duplicate-free masks) or is a complete multipartite
/// hypergraph whose edges are decided from the part layout and never
/// materialized unless asked for.
class UniformHypergraph {
 public:
  struct Explicit {
    std::vector<VertexMask> edges;  // ascending
  };
  struct Multipartite {
    PartiteShape shape;
    std::vector<VertexMask> part_masks;  // contiguous vertex ranges in part order
    std::vector<int> part_of;            // vertex -> part index
  };

  static UniformHypergraph from_masks(int n, int r, std::vector<VertexMask> edges) {
    check_vertex_cap(n);
    if (r < 2) throw std::invalid_argument("edge size r must be at least 2, got " + std::to_string(r));
    for (VertexMask e : edges) {
      if (popcount(e) != r) throw std::invalid_argument("edge of wrong size");
      if (e & ~low_bits(n)) throw std::out_of_range("edge vertex outside 0..n-1");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    return UniformHypergraph(n, r, Explicit{std::move(edges)});
  }

  /// Edges given as strictly increasing vertex lists.
  static UniformHypergraph from_edge_lists(int n, int r, const std::vector<std::vector<Vertex>>& edges) {
    check_vertex_cap(n);
    std::vector<VertexMask> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
      if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("edge vertices must be strictly increasing");
      if (static_cast<int>(e.size()) != r)
        throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
      masks.push_back(to_mask(e, n));
    }
    return from_masks(n, r, std::move(masks));
  }

  static UniformHypergraph multipartite(const PartiteShape& shape) {
    Multipartite mp{shape, {}, {}};
    int start = 0;
    for (int i = 0; i < shape.part_count(); ++i) {
      const int p = shape.parts()[static_cast<std::size_t>(i)];
      mp.part_masks.push_back(low_bits(start + p) & ~low_bits(start));
      mp.part_of.insert(mp.part_of.end(), static_cast<std::size_t>(p), i);
      start += p;
    }
    return UniformHypergraph(start, shape.uniformity(), std::move(mp));
  }

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  VertexMask all_vertices() const { return low_bits(n_); }

  bool is_multipartite() const { return std::holds_alternative<Multipartite>(rep_); }
  const Multipartite* multipartite_rep() const { return std::get_if<Multipartite>(&rep_); }
  const Explicit* explicit_rep() const { return std::get_if<Explicit>(&rep_); }
  const PartiteShape* shape() const {
    const auto* mp = multipartite_rep();
    return mp ? &mp->shape : nullptr;
  }

  /// True iff s has exactly r vertices and is an edge. Malformed sets are
  /// simply not edges.
  bool is_edge(VertexMask s) const {
    if (popcount(s) != r_ || (s & ~all_vertices())) return false;
    if (const auto* mp = multipartite_rep()) {
      const VertexMask first_part = mp->part_masks[static_cast<std::size_t>(mp->part_of[static_cast<std::size_t>(std::countr_zero(s))])];
      return (s & ~first_part) != 0;
    }
    const auto& edges = std::get<Explicit>(rep_).edges;
    return std::binary_search(edges.begin(), edges.end(), s);
  }

  bool is_edge(const std::vector<Vertex>& s) const {
    VertexMask m = 0;
    for (Vertex v : s) {
      if (v < 0 || v >= n_ || (m & bit(v))) return false;
      m |= bit(v);
    }
    return is_edge(m);
  }

  std::uint64_t edge_count() const {
    if (const auto* mp = multipartite_rep()) {
      std::uint64_t inside = 0;
      for (int p : mp->shape.parts()) inside += binomial(p, r_);
      return binomial(n_, r_) - inside;
    }
    return std::get<Explicit>(rep_).edges.size();
  }

  /// Visits edges in ascending mask order; fn returns false to stop.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    if (const auto* ex = explicit_rep()) {
      for (VertexMask e : ex->edges)
        if (!fn(e)) return;
      return;
    }
    for_each_subset_of_size(n_, r_, [&](VertexMask s) { return is_edge(s) ? bool(fn(s)) : true; });
  }

  std::vector<VertexMask> edge_masks() const {
    std::vector<VertexMask> out;
    for_each_edge([&](VertexMask e) {
      out.push_back(e);
      return true;
    });
    return out;
  }

  /// The same hypergraph with its edges written out.
  UniformHypergraph materialized() const { return from_masks(n_, r_, edge_masks()); }

  /// Same vertex count, edge size and edge set (representation may differ).
  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    if (a.n_ != b.n_ || a.r_ != b.r_) return false;
    if (a.is_multipartite() && b.is_multipartite() && *a.shape() == *b.shape()) return true;
    return a.edge_masks() == b.edge_masks();
  }

 private:
  UniformHypergraph(int n, int r, std::variant<Explicit, Multipartite> rep) : n_(n), r_(r), rep_(std::move(rep)) {}

  int n_;
  int r_;
  std::variant<Explicit, Multipartite> rep_;
};

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

inline UniformHypergraph complete_multipartite(const PartiteShape& shape) {
  return UniformHypergraph::multipartite(shape);
}

/// All r-subsets of 0..n-1 are edges. Stored as the multipartite hypergraph
/// with n singleton parts, which has exactly that edge set.
inline UniformHypergraph complete_uniform(int n, int r) {
  if (r < 2) throw std::invalid_argument("edge size r must be at least 2, got " + std::to_string(r));
  if (n == 0) return UniformHypergraph::from_masks(0, r, {});
  return complete_multipartite(PartiteShape(r, std::vector<int>(static_cast<std::size_t>(n), 1)));
}

inline bool is_edge(const UniformHypergraph& h, const std::vector<Vertex>& s) { return h.is_edge(s); }

/// Vertices of h2 are shifted by h1.vertex_count(). The join of two
/// multipartite hypergraphs is the multipartite hypergraph on both part lists.
inline UniformHypergraph join(const UniformHypergraph& h1, const UniformHypergraph& h2) {
  if (h1.uniformity() != h2.uniformity())
    throw std::invalid_argument("join needs equal edge sizes, got " + std::to_string(h1.uniformity()) + " and " +
                                std::to_string(h2.uniformity()));
  if (h2.vertex_count() == 0) return h1;
  if (h1.vertex_count() == 0) return h2;
  const int n1 = h1.vertex_count();
  const int n = n1 + h2.vertex_count();
  check_vertex_cap(n);
  const int r = h1.uniformity();
  if (h1.is_multipartite() && h2.is_multipartite()) {
    std::vector<int> parts = h1.shape()->parts();
    parts.insert(parts.end(), h2.shape()->parts().begin(), h2.shape()->parts().end());
    return complete_multipartite(PartiteShape(r, std::move(parts)));
  }
  const VertexMask left = low_bits(n1);
  std::vector<VertexMask> edges;
  for_each_subset_of_size(n, r, [&](VertexMask s) {
    const bool in_left = (s & ~left) == 0;
    const bool in_right = (s & left) == 0;
    if ((!in_left && !in_right) || (in_left && h1.is_edge(s)) || (in_right && h2.is_edge(s >> n1)))
      edges.push_back(s);
    return true;
  });
  return UniformHypergraph::from_masks(n, r, std::move(edges));
}

/// Edges are the r-subsets S in which some vertex is adjacent to all other
/// r-1 vertices of S (the induced maximum degree is r-1).
inline UniformHypergraph graph_power_hypergraph(const SimpleGraph& g, int r) {
  if (r < 2) throw std::invalid_argument("edge size r must be at least 2, got " + std::to_string(r));
  std::vector<VertexMask> edges;
  for_each_subset_of_size(g.vertex_count(), r, [&](VertexMask s) {
    for (Vertex v : to_vertices(s)) {
      const VertexMask rest = s & ~bit(v);
      if ((g.neighbours(v) & rest) == rest) {
        edges.push_back(s);
        break;
      }
    }
    return true;
  });
  return UniformHypergraph::from_masks(g.vertex_count(), r, std::move(edges));
}

/// Packs the bits of `s` selected by `x` into the low bits, preserving order.
inline VertexMask compress_mask(VertexMask s, VertexMask x) {
  VertexMask out = 0;
  int idx = 0;
  for (VertexMask rest = x; rest; rest &= rest - 1, ++idx)
    if (s & rest & (~rest + 1)) out |= bit(idx);
  return out;
}

/// H[X]: vertices of x relabeled 0..|x|-1 in increasing order, keeping the
/// edges inside x. A multipartite hypergraph stays multipartite with the
/// truncated part sizes.
inline UniformHypergraph induced_sub(const UniformHypergraph& h, VertexMask x) {
  if (x & ~h.all_vertices()) throw std::out_of_range("induced vertex set has a vertex outside the hypergraph");
  const int r = h.uniformity();
  if (x == 0) return UniformHypergraph::from_masks(0, r, {});
  if (const auto* mp = h.multipartite_rep()) {
    std::vector<int> parts;
    for (VertexMask pm : mp->part_masks)
      if (const int c = popcount(pm & x); c > 0) parts.push_back(c);
    return complete_multipartite(PartiteShape(r, std::move(parts)));
  }
  std::vector<VertexMask> edges;
  for (VertexMask e : h.explicit_rep()->edges)
    if ((e & ~x) == 0) edges.push_back(compress_mask(e, x));
  return UniformHypergraph::from_masks(popcount(x), r, std::move(edges));
}

inline UniformHypergraph induced_sub(const UniformHypergraph& h, const std::vector<Vertex>& x) {
  return induced_sub(h, to_mask(x, h.vertex_count()));
}

}  // namespace hyperchoose

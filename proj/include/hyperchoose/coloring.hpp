#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperchoose/bits.hpp"
#include "hyperchoose/detail/list_search.hpp"
#include "hyperchoose/hypergraph.hpp"
#include "hyperchoose/lists.hpp"

namespace hyperchoose {

// ---------------------------------------------------------------------------
// Properness
// ---------------------------------------------------------------------------

/// No edge is monochromatic. Multipartite hypergraphs use the class rule:
/// proper iff every colour class with at least r vertices lies in one part.
inline bool is_proper(const UniformHypergraph& h, const Coloring& f) {
  if (f.vertex_count() != h.vertex_count())
    throw std::invalid_argument("colouring covers " + std::to_string(f.vertex_count()) + " of " +
                                std::to_string(h.vertex_count()) + " vertices");
  if (const auto* mp = h.multipartite_rep()) {
    for (Color c : f.colors_used()) {
      const VertexMask cls = f.color_class(c);
      if (popcount(cls) < h.uniformity()) continue;
      const auto home = mp->part_masks[static_cast<std::size_t>(mp->part_of[static_cast<std::size_t>(std::countr_zero(cls))])];
      if (cls & ~home) return false;
    }
    return true;
  }
  bool ok = true;
  h.for_each_edge([&](VertexMask e) {
    const auto vs = to_vertices(e);
    ok = std::any_of(vs.begin() + 1, vs.end(), [&](Vertex v) { return f[v] != f[vs.front()]; });
    return ok;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

/// A proper colouring with colours 0..k-1, if one exists.
inline std::optional<Coloring> find_k_coloring(const UniformHypergraph& h, int k,
                                               const Deadline& deadline = Deadline::none()) {
  const int n = h.vertex_count();
  if (n == 0) return Coloring{};
  if (k <= 0) return std::nullopt;
  k = std::min(k, n);
  std::vector<detail::ColorMask> domains(static_cast<std::size_t>(n), low_bits(k));
  auto found = detail::search_coloring(h, k, std::move(domains), /*interchangeable=*/true, deadline);
  if (!found) return std::nullopt;
  return Coloring(std::move(*found));
}

/// Smallest k worth trying: ceil(n/(r-1)) when every r-subset is an edge,
/// otherwise 1.
inline int chromatic_lower_bound(const UniformHypergraph& h) {
  const int n = h.vertex_count();
  if (n == 0) return 0;
  const int r = h.uniformity();
  if (n >= r && h.edge_count() == binomial(n, r)) return (n + r - 2) / (r - 1);
  return 1;
}

/// Exact chromatic number by iterative deepening from chromatic_lower_bound.
/// 0 for the empty vertex set, 1 for edgeless hypergraphs.
inline int chromatic_number(const UniformHypergraph& h, const Deadline& deadline = Deadline::none()) {
  const int n = h.vertex_count();
  for (int k = chromatic_lower_bound(h); k <= n; ++k)
    if (find_k_coloring(h, k, deadline)) return k;
  return n;  // unreachable: n singleton classes are always proper
}

/// Minimum number of colours whose classes each induce maximum degree <= d,
/// computed as the chromatic number of the (d+2)-uniform lift of g.
inline int improper_chromatic_number(const SimpleGraph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree bound d must be non-negative");
  return chromatic_number(graph_power_hypergraph(g, d + 2));
}

// ---------------------------------------------------------------------------
// List colouring
// ---------------------------------------------------------------------------

namespace detail {

inline void check_lists_cover(const UniformHypergraph& h, const ListAssignment& l) {
  if (l.vertex_count() != h.vertex_count())
    throw std::invalid_argument("list assignment has " + std::to_string(l.vertex_count()) + " lists for " +
                                std::to_string(h.vertex_count()) + " vertices");
}

}  // namespace detail

/// An L-colouring of h, or nullopt when none exists. Exhaustive.
inline std::optional<Coloring> find_list_coloring(const UniformHypergraph& h, const ListAssignment& l,
                                                  const Deadline& deadline = Deadline::none()) {
  detail::check_lists_cover(h, l);
  const auto& universe = l.universe();
  if (static_cast<int>(universe.size()) > detail::kMaxColors)
    throw std::length_error("list universe exceeds 64 colours");
  std::vector<detail::ColorMask> domains;
  domains.reserve(static_cast<std::size_t>(h.vertex_count()));
  for (const auto& list : l.lists()) {
    detail::ColorMask m = 0;
    for (Color c : list)
      m |= detail::ColorMask{1} << (std::lower_bound(universe.begin(), universe.end(), c) - universe.begin());
    if (m == 0) return std::nullopt;
    domains.push_back(m);
  }
  auto found = detail::search_coloring(h, static_cast<int>(universe.size()), std::move(domains),
                                       /*interchangeable=*/false, deadline);
  if (!found) return std::nullopt;
  std::vector<Color> colors;
  colors.reserve(found->size());
  for (int idx : *found) colors.push_back(universe[static_cast<std::size_t>(idx)]);
  return Coloring(std::move(colors));
}

// ---------------------------------------------------------------------------
// Hall matching
// ---------------------------------------------------------------------------

/// Per vertex: the colour it was matched to and which of the r-1 copies of
/// that colour (1-based).
struct MatchingCertificate {
  std::vector<std::pair<Color, int>> pairs;

  friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

struct HallColoring {
  Coloring coloring;
  MatchingCertificate certificate;
};

/// Matches vertices into r-1 copies of each universe colour (a vertex sees
/// every copy of each colour in its list). A saturating matching gives an
/// L-colouring whose classes have at most r-1 vertices. nullopt only means
/// the matching does not saturate; h may still be L-colourable.
inline std::optional<HallColoring> hall_color(const UniformHypergraph& h, const ListAssignment& l) {
  detail::check_lists_cover(h, l);
  const int n = h.vertex_count();
  const int copies = h.uniformity() - 1;
  const auto& universe = l.universe();
  const int slots = static_cast<int>(universe.size()) * copies;

  // Right-hand slot s = colour_index * copies + (copy - 1); adjacency in
  // ascending slot order gives lowest-index tie-breaking.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    for (Color c : l.list(v)) {
      const int ci = static_cast<int>(std::lower_bound(universe.begin(), universe.end(), c) - universe.begin());
      for (int j = 0; j < copies; ++j) adj[static_cast<std::size_t>(v)].push_back(ci * copies + j);
    }

  std::vector<int> slot_owner(static_cast<std::size_t>(slots), -1);
  std::vector<int> vertex_slot(static_cast<std::size_t>(n), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int v) -> bool {
    for (int s : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = 1;
      const int owner = slot_owner[static_cast<std::size_t>(s)];
      if (owner < 0 || self(self, owner)) {
        slot_owner[static_cast<std::size_t>(s)] = v;
        vertex_slot[static_cast<std::size_t>(v)] = s;
        return true;
      }
    }
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    seen.assign(static_cast<std::size_t>(slots), 0);
    if (!augment(augment, v)) return std::nullopt;
  }

  std::vector<Color> colors;
  MatchingCertificate cert;
  for (Vertex v = 0; v < n; ++v) {
    const int s = vertex_slot[static_cast<std::size_t>(v)];
    const Color c = universe[static_cast<std::size_t>(s / copies)];
    colors.push_back(c);
    cert.pairs.emplace_back(c, s % copies + 1);
  }
  return HallColoring{Coloring(std::move(colors)), std::move(cert)};
}

// ---------------------------------------------------------------------------
// Combination, list restriction, multiplicity
// ---------------------------------------------------------------------------

class CombineError : public std::invalid_argument {
 public:
  enum class Kind {
    size_mismatch,          // f or g does not cover X or V \ X
    reserved_set_incomplete,  // C misses a colour of f(X)
    color_overlap,          // g uses a colour of C
    part_not_proper,        // f or g is not proper on its induced part
  };
  CombineError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Merges a colouring f of H[X] with a colouring g of H[V \ X] that avoids
/// the colour set c ⊇ f(X). f and g are indexed by the relabeled induced
/// vertices (increasing order within X and within V \ X).
inline Coloring combine_colorings(const UniformHypergraph& h, VertexMask x, const Coloring& f,
                                  const std::vector<Color>& c, const Coloring& g) {
  using K = CombineError::Kind;
  if (x & ~h.all_vertices()) throw std::out_of_range("X has a vertex outside the hypergraph");
  const VertexMask y = h.all_vertices() & ~x;
  if (f.vertex_count() != popcount(x) || g.vertex_count() != popcount(y))
    throw CombineError(K::size_mismatch, "colourings do not match |X| and |V \\ X|");
  std::vector<Color> reserved = c;
  std::sort(reserved.begin(), reserved.end());
  for (Color fc : f.colors_used())
    if (!std::binary_search(reserved.begin(), reserved.end(), fc))
      throw CombineError(K::reserved_set_incomplete, "colour " + std::to_string(fc) + " of f(X) is not in C");
  for (Color gc : g.colors_used())
    if (std::binary_search(reserved.begin(), reserved.end(), gc))
      throw CombineError(K::color_overlap, "g uses colour " + std::to_string(gc) + " from C");
  if (!is_proper(induced_sub(h, x), f)) throw CombineError(K::part_not_proper, "f is not proper on H[X]");
  if (!is_proper(induced_sub(h, y), g)) throw CombineError(K::part_not_proper, "g is not proper on H[V \\ X]");

  std::vector<Color> merged(static_cast<std::size_t>(h.vertex_count()));
  int fi = 0;
  int gi = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    merged[static_cast<std::size_t>(v)] = (x & bit(v)) ? f[fi++] : g[gi++];
  Coloring out(std::move(merged));
  if (!is_proper(h, out)) throw std::logic_error("combined colouring is not proper");
  return out;
}

/// (L \ C)(v) = L(v) \ C
inline ListAssignment restrict_lists(const ListAssignment& l, const std::vector<Color>& c) {
  std::vector<Color> removed = c;
  std::sort(removed.begin(), removed.end());
  std::vector<std::vector<Color>> out;
  out.reserve(l.lists().size());
  for (const auto& list : l.lists()) {
    std::vector<Color> kept;
    std::set_difference(list.begin(), list.end(), removed.begin(), removed.end(), std::back_inserter(kept));
    out.push_back(std::move(kept));
  }
  return ListAssignment(std::move(out));
}

/// Number of vertices of x whose list contains c.
inline int multiplicity(const ListAssignment& l, VertexMask x, Color c) {
  if (x & ~low_bits(l.vertex_count())) throw std::out_of_range("vertex set outside the list assignment");
  int count = 0;
  for (Vertex v : to_vertices(x)) count += l.contains(v, c) ? 1 : 0;
  return count;
}

}  // namespace hyperchoose

#include <gtest/gtest.h>

#include <set>

#include "hyperchoose/canonical.hpp"
#include "hyperchoose/choosability.hpp"
#include "oracles.hpp"

using namespace hyperchoose;

namespace {

UniformHypergraph mp(int r, std::vector<int> parts) { return complete_multipartite(PartiteShape(r, std::move(parts))); }

std::vector<oracle::Edge> edges_of(const UniformHypergraph& h) {
  std::vector<oracle::Edge> out;
  h.for_each_edge([&](VertexMask e) {
    out.push_back(to_vertices(e));
    return true;
  });
  return out;
}

/// Vertex permutations mapping parts onto parts.
std::vector<std::vector<int>> partition_preserving_perms(const std::vector<int>& label) {
  const int n = static_cast<int>(label.size());
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        ok = (label[static_cast<std::size_t>(u)] == label[static_cast<std::size_t>(v)]) ==
             (label[static_cast<std::size_t>(p[static_cast<std::size_t>(u)])] ==
              label[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct OrbitCount {
  std::size_t orbits = 0;
  std::set<oracle::Lists> minima;  // lexicographically least member of each orbit
};

/// Orbits of all k-list assignments over {0..m-1} under colour relabeling
/// and the given vertex permutations.
OrbitCount orbits(int n, int k, int m, const std::vector<std::vector<int>>& vperms) {
  OrbitCount out;
  const auto subsets = oracle::k_subsets(m, k);
  const std::size_t s = subsets.size();
  std::vector<std::size_t> index_of(std::size_t{1} << m);
  for (std::size_t i = 0; i < s; ++i) {
    unsigned mask = 0;
    for (int col : subsets[i]) mask |= 1u << col;
    index_of[mask] = i;
  }
  std::size_t total = 1;
  for (int v = 0; v < n; ++v) total *= s;
  std::vector<char> seen(total, 0);
  std::vector<int> cperm(static_cast<std::size_t>(m));
  for (std::size_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    ++out.orbits;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    std::size_t c = code;
    for (int v = 0; v < n; ++v) {
      pick[static_cast<std::size_t>(v)] = c % s;
      c /= s;
    }
    oracle::Lists best;
    std::iota(cperm.begin(), cperm.end(), 0);
    do {
      for (const auto& vp : vperms) {
        oracle::Lists img(static_cast<std::size_t>(n));
        std::size_t img_code = 0;
        for (int v = n - 1; v >= 0; --v) {
          std::vector<int> l;
          for (int col : subsets[pick[static_cast<std::size_t>(v)]]) l.push_back(cperm[static_cast<std::size_t>(col)]);
          std::sort(l.begin(), l.end());
          img[static_cast<std::size_t>(vp[static_cast<std::size_t>(v)])] = l;
        }
        for (int v = n - 1; v >= 0; --v) {
          unsigned mask = 0;
          for (int col : img[static_cast<std::size_t>(v)]) mask |= 1u << col;
          img_code = img_code * s + index_of[mask];
        }
        seen[img_code] = 1;
        if (best.empty() || img < best) best = img;
      }
    } while (std::next_permutation(cperm.begin(), cperm.end()));
    out.minima.insert(best);
  }
  return out;
}

}  // namespace

TEST(UniverseBound, Examples) {
  EXPECT_EQ(universe_bound(6, 2), 5);
  EXPECT_EQ(universe_bound(8, 3), 3);
  EXPECT_EQ(universe_bound(3, 4), 0);
  EXPECT_THROW(universe_bound(3, 1), std::invalid_argument);
  EXPECT_THROW(universe_bound(0, 2), std::invalid_argument);
  for (int r = 2; r <= 5; ++r)
    for (int n = 1; n <= 30; ++n) EXPECT_EQ(universe_bound(n, r), oracle::small_universe(n, r));
}

TEST(Enumerate, Examples) {
  const auto single = enumerate_assignments(mp(2, {2}), 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], ListAssignment({{0}, {0}}));
  EXPECT_EQ(enumerate_assignments(mp(2, {1, 1}), 1).size(), 1u);
  EXPECT_TRUE(enumerate_assignments(mp(3, {3, 2}), 3).empty());  // bound 2 < 3
  EXPECT_THROW(enumerate_assignments(mp(2, {2}), 0), std::invalid_argument);
}

TEST(Enumerate, RepresentativesAreOrbitMinimaCoveringEveryOrbit) {
  for (int r = 2; r <= 3; ++r)
    for (const auto& parts : oracle::normalized_shapes_upto(r, 6))
      for (int k = 1; k <= 2; ++k) {
        const int n = std::accumulate(parts.begin(), parts.end(), 0);
        const int m = oracle::small_universe(n, r);
        if (m < k) {
          EXPECT_TRUE(enumerate_assignments(mp(r, parts), k).empty());
          continue;
        }
        const auto want = orbits(n, k, m, partition_preserving_perms(oracle::part_labels(parts)));
        std::set<oracle::Lists> got;
        for (const auto& l : enumerate_assignments(mp(r, parts), k)) {
          EXPECT_TRUE(l.is_k_assignment(k));
          EXPECT_TRUE(got.insert(l.lists()).second) << "duplicate representative";
        }
        EXPECT_EQ(got.size(), want.orbits) << "r=" << r << " n=" << n << " k=" << k;
        EXPECT_EQ(got, want.minima);
      }
}

TEST(Enumerate, ExplicitHypergraphsUseColourSymmetryOnly) {
  const auto h = UniformHypergraph::from_edge_lists(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto identity = std::vector<std::vector<int>>{{0, 1, 2, 3, 4}};
  const auto want = orbits(5, 2, universe_bound(5, 2), identity);
  std::set<oracle::Lists> got;
  for (const auto& l : enumerate_assignments(h, 2)) got.insert(l.lists());
  EXPECT_EQ(got, want.minima);
}

TEST(Enumerate, SplitTasksReproduceTheSerialStream) {
  const auto h = mp(2, {3, 2, 2});
  const AssignmentEnumerator e(h, 2);
  std::vector<std::vector<int>> serial;
  e.for_each([&](const std::vector<int>& s) {
    serial.push_back(s);
    return true;
  });
  for (std::size_t want_tasks : {1u, 4u, 50u}) {
    std::vector<std::vector<int>> pieces;
    for (const auto& t : e.split(want_tasks))
      e.run(t, [&](const std::vector<int>& s) {
        pieces.push_back(s);
        return true;
      });
    EXPECT_EQ(pieces, serial);
  }
  for (const auto& s : serial) EXPECT_TRUE(e.is_canonical(s));
  EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end()));
}

TEST(Choosable, Examples) {
  const auto k33 = mp(2, {3, 3});
  const auto two = is_k_choosable(k33, 2);
  EXPECT_FALSE(two.choosable);
  ASSERT_TRUE(two.witness);
  EXPECT_TRUE(two.witness->is_k_assignment(2));
  EXPECT_FALSE(find_list_coloring(k33, *two.witness));
  EXPECT_TRUE(is_k_choosable(k33, 3).choosable);

  const auto fast = is_k_choosable(mp(3, {4, 4, 3}), 6);
  EXPECT_TRUE(fast.choosable);
  EXPECT_TRUE(fast.fast_path);
  EXPECT_EQ(fast.stats.enumerated, 0u);
}

TEST(Choosable, AgreesWithNaiveOracleOnSmallShapes) {
  for (int r = 2; r <= 3; ++r)
    for (const auto& parts : oracle::normalized_shapes_upto(r, 6))
      for (int k = 1; k <= 3; ++k) {
        const int n = std::accumulate(parts.begin(), parts.end(), 0);
        const auto h = mp(r, parts);
        const auto edges = oracle::multipartite_edges(r, parts);
        const int m = oracle::small_universe(n, r);
        const bool want = oracle::ChoosabilityDp(n, edges, k, m).choosable();
        const auto got = is_k_choosable(h, k);
        EXPECT_EQ(got.choosable, want) << "r=" << r << " n=" << n << " k=" << k;
        if (!got.choosable) {
          ASSERT_TRUE(got.witness);
          EXPECT_TRUE(got.witness->is_k_assignment(k));
          EXPECT_FALSE(oracle::list_colorable(n, edges, got.witness->lists()));
        }
      }
}

TEST(Choosable, DpOracleMatchesLiteralEnumeration) {
  for (int r = 2; r <= 3; ++r)
    for (const auto& parts : oracle::normalized_shapes_upto(r, 5))
      for (int k = 1; k <= 2; ++k) {
        const int n = std::accumulate(parts.begin(), parts.end(), 0);
        const auto edges = oracle::multipartite_edges(r, parts);
        const int m = oracle::small_universe(n, r);
        EXPECT_EQ(oracle::ChoosabilityDp(n, edges, k, m).choosable(), oracle::naive_choosable(n, edges, k, m));
      }
}

TEST(Choosable, SmallUniverseSufficesAgainstUnboundedPalettes) {
  // Universes of size n*k admit every k-list assignment up to relabeling.
  for (int r = 2; r <= 3; ++r)
    for (const auto& parts : oracle::normalized_shapes_upto(r, 4))
      for (int k = 1; k <= 2; ++k) {
        const int n = std::accumulate(parts.begin(), parts.end(), 0);
        const auto edges = oracle::multipartite_edges(r, parts);
        EXPECT_EQ(oracle::ChoosabilityDp(n, edges, k, std::min(n * k, 7)).choosable(),
                  oracle::ChoosabilityDp(n, edges, k, oracle::small_universe(n, r)).choosable());
      }
}

TEST(Choosable, JobsDoNotChangeVerdictsOrWitnesses) {
  for (const auto& [r, parts, k] : std::vector<std::tuple<int, std::vector<int>, int>>{
           {2, {3, 3}, 2}, {2, {3, 3, 1}, 2}, {2, {2, 2, 2}, 2}, {3, {4, 4}, 2}, {2, {4, 2, 1}, 3}}) {
    const auto h = mp(r, parts);
    const auto serial = is_k_choosable(h, k);
    for (int jobs : {2, 3, 5}) {
      const auto par = is_k_choosable(h, k, {Deadline::none(), jobs});
      EXPECT_EQ(par.choosable, serial.choosable);
      EXPECT_EQ(par.witness, serial.witness);
    }
  }
}

TEST(Choosable, BudgetOverrunIsReported) {
  const auto h = mp(2, {3, 2, 2});
  EXPECT_THROW(is_k_choosable(h, 3, {Deadline::after(std::chrono::milliseconds(0)), 1}), BudgetExceeded);
  EXPECT_FALSE(try_is_k_choosable(h, 3, {Deadline::after(std::chrono::milliseconds(0)), 1}));
}

TEST(ListChromatic, Examples) {
  EXPECT_EQ(list_chromatic_number(mp(2, {3, 2})), 2);
  EXPECT_EQ(list_chromatic_number(mp(3, {4, 4})), 2);
  EXPECT_EQ(list_chromatic_number(mp(3, {5, 3})), 2);
  const auto k33 = list_chromatic_details(mp(2, {3, 3}));
  EXPECT_EQ(k33.chi, 2);
  EXPECT_EQ(k33.chi_l, 3);
  ASSERT_TRUE(k33.witness_at_chi);
  EXPECT_FALSE(find_list_coloring(mp(2, {3, 3}), *k33.witness_at_chi));
  EXPECT_EQ(list_chromatic_number(mp(3, {2})), 1);
  EXPECT_EQ(list_chromatic_number(complete_uniform(0, 2)), 0);
}

TEST(ListChromatic, NeverBelowChromaticNumber) {
  for (int r = 2; r <= 3; ++r)
    for (const auto& parts : oracle::normalized_shapes_upto(r, 6)) {
      const auto d = list_chromatic_details(mp(r, parts));
      EXPECT_GE(d.chi_l, d.chi);
      if (sufficient_bound_check(mp(r, parts))) EXPECT_EQ(d.chi_l, d.chi);
    }
}

TEST(Adversarial, Thm31Construction) {
  for (const auto& [r, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {4, 3}}) {
    const auto inst = adversarial_thm31(r, k);
    const auto& h = inst.hypergraph;
    std::vector<int> parts{2 * r};
    parts.insert(parts.end(), static_cast<std::size_t>(k - 1), r);
    EXPECT_EQ(*h.shape(), PartiteShape(r, parts));
    EXPECT_TRUE(inst.lists.is_k_assignment(k));
    EXPECT_EQ(static_cast<int>(inst.lists.universe().size()), r * k / (r - 1));
    VertexMask us = 0;
    VertexMask vs = 0;
    for (int j = 0; j < r; ++j) {
      us |= bit(2 * j);
      vs |= bit(2 * j + 1);
    }
    for (Color c : inst.lists.universe()) {
      EXPECT_LT(multiplicity(inst.lists, us, c), r);
      EXPECT_LT(multiplicity(inst.lists, vs, c), r);
      for (int i = 1; i < k; ++i) EXPECT_LT(multiplicity(inst.lists, low_bits(r) << (2 * r + (i - 1) * r), c), r);
    }
  }
  EXPECT_EQ(adversarial_thm31(3, 2).lists.universe().size(), 3u);
  EXPECT_EQ(adversarial_thm31(3, 4).lists.universe().size(), 6u);
  EXPECT_EQ(adversarial_thm31(4, 3).lists.universe().size(), 4u);
  EXPECT_THROW(adversarial_thm31(2, 2), std::invalid_argument);
  EXPECT_THROW(adversarial_thm31(3, 3), std::invalid_argument);
}

TEST(Adversarial, Thm32Construction) {
  for (int r = 2; r <= 4; ++r) {
    const auto inst = adversarial_thm32(r);
    EXPECT_EQ(inst.hypergraph.vertex_count(), r * (r + 1));
    EXPECT_TRUE(inst.lists.is_k_assignment(r));
    EXPECT_EQ(static_cast<int>(inst.lists.universe().size()), r + 1);
    for (int i = 0; i < r; ++i)
      for (Color c = 1; c <= r + 1; ++c) EXPECT_EQ(multiplicity(inst.lists, low_bits(r + 1) << (i * (r + 1)), c), r);
  }
  EXPECT_EQ(adversarial_thm32(2).lists.lists(),
            (std::vector<std::vector<Color>>{{2, 3}, {1, 3}, {1, 2}, {2, 3}, {1, 3}, {1, 2}}));
  EXPECT_THROW(adversarial_thm32(1), std::invalid_argument);
}

TEST(Adversarial, SmallInstancesAreNotColourable) {
  EXPECT_TRUE(verify_not_list_colorable(adversarial_thm31(3, 2).hypergraph, adversarial_thm31(3, 2).lists));
  EXPECT_TRUE(verify_not_list_colorable(adversarial_thm32(2).hypergraph, adversarial_thm32(2).lists));
  EXPECT_TRUE(verify_not_list_colorable(adversarial_thm32(3).hypergraph, adversarial_thm32(3).lists));
  EXPECT_FALSE(verify_not_list_colorable(mp(2, {2, 2}), ListAssignment::uniform(4, {0, 1})));
  const auto inst = adversarial_thm32(2);
  EXPECT_FALSE(oracle::list_colorable(6, edges_of(inst.hypergraph), inst.lists.lists()));
}

TEST(SufficientBound, Examples) {
  EXPECT_TRUE(sufficient_bound_check(mp(3, {2, 2})));
  EXPECT_FALSE(sufficient_bound_check(mp(3, {4, 4})));
  EXPECT_TRUE(sufficient_bound_check(mp(2, {1, 1, 1})));
}

TEST(NormalizedShapes, MatchIndependentListing) {
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k) {
      std::set<std::vector<int>> want;
      for (const auto& p : oracle::normalized_shapes_upto(r, r * k + r - 1))
        if (static_cast<int>(p.size()) == k) want.insert(p);
      std::set<std::vector<int>> got;
      for (const auto& s : normalized_shapes(r, k, r * k + r - 1)) EXPECT_TRUE(got.insert(s.parts()).second);
      EXPECT_EQ(got, want);
    }
}

TEST(Scan, Examples) {
  const auto r2 = conjecture_scan(2, 2);
  EXPECT_EQ(r2.count(ScanEntry::Status::counterexample), 0u);
  EXPECT_EQ(r2.count(ScanEntry::Status::skipped), 0u);
  std::set<std::vector<int>> shapes;
  for (const auto& e : r2.entries) {
    shapes.insert(e.shape.parts());
    EXPECT_EQ(e.chi_l, e.shape.part_count());
  }
  for (const auto& s : std::vector<std::vector<int>>{{3, 2}, {2, 2}, {3, 1}, {2, 1}, {1, 1}, {4, 1}, {3}, {1}})
    EXPECT_TRUE(shapes.count(s));

  const auto r3 = conjecture_scan(3, 2);
  std::set<std::vector<int>> two_part;
  for (const auto& e : r3.entries) {
    EXPECT_EQ(e.status, ScanEntry::Status::ok);
    if (e.shape.part_count() == 2) {
      two_part.insert(e.shape.parts());
      EXPECT_EQ(e.chi_l, 2);
    }
  }
  for (const auto& s : std::vector<std::vector<int>>{{5, 3}, {4, 4}, {4, 3}, {3, 3}, {4, 2}, {3, 2}, {2, 2}})
    EXPECT_TRUE(two_part.count(s));

  for (const auto& e : conjecture_scan(3, 1).entries) EXPECT_EQ(e.chi_l, 1);
  EXPECT_THROW(conjecture_scan(1, 2), std::invalid_argument);
}

TEST(Scan, OverrunIsSkippedNotOmitted) {
  ScanOptions o;
  o.budget_seconds = 0.0;
  const auto rep = conjecture_scan(2, 3, o);
  EXPECT_GT(rep.count(ScanEntry::Status::skipped), 0u);
  EXPECT_EQ(rep.entries.size(), conjecture_scan(2, 2).entries.size() + normalized_shapes(2, 3, 7).size());
}

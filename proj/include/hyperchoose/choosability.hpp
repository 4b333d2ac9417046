#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperchoose/canonical.hpp"
#include "hyperchoose/coloring.hpp"
#include "hyperchoose/hypergraph.hpp"
#include "hyperchoose/lists.hpp"

namespace hyperchoose {

struct SearchStats {
  std::uint64_t enumerated = 0;    // canonical assignments examined
  std::uint64_t hall_decided = 0;  // of those, settled by the Hall matching alone
  double seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o) {
    enumerated += o.enumerated;
    hall_decided += o.hall_decided;
    seconds += o.seconds;
    return *this;
  }
};

struct ChoosabilityVerdict {
  bool choosable = false;
  std::optional<ListAssignment> witness;  // present iff not choosable
  bool fast_path = false;                 // (r-1)k >= n, decided without enumeration
  SearchStats stats;
};

struct ChoosabilityOptions {
  Deadline deadline;
  int jobs = 1;
};

namespace detail {

/// Decides one assignment: Hall matching first, backtracking second.
/// Returns true iff h is L-colourable.
inline bool colorable_for_choosability(const UniformHypergraph& h, const ListAssignment& l, SearchStats& stats,
                                       const Deadline& deadline) {
  ++stats.enumerated;
  if (hall_color(h, l)) {
    ++stats.hall_decided;
    return true;
  }
  return find_list_coloring(h, l, deadline).has_value();
}

}  // namespace detail

/// Decides whether h is L-colourable for every k-list assignment L. Only
/// assignments on at most universe_bound(n, r) colours are examined, one per
/// symmetry class. The first failing assignment in canonical order is
/// returned as the witness, independent of `jobs`. Throws BudgetExceeded
/// when the deadline passes.
inline ChoosabilityVerdict is_k_choosable(const UniformHypergraph& h, int k, const ChoosabilityOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("list size k must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](ChoosabilityVerdict v) {
    v.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
  };

  const int n = h.vertex_count();
  if (static_cast<long long>(h.uniformity() - 1) * k >= n) {
    ChoosabilityVerdict v;
    v.choosable = true;
    v.fast_path = true;
    return finish(v);
  }

  const AssignmentEnumerator e(h, k);
  ChoosabilityVerdict verdict;
  verdict.choosable = true;

  if (opts.jobs <= 1) {
    e.for_each(
        [&](const std::vector<int>& seq) {
          ListAssignment l = e.to_assignment(seq);
          if (detail::colorable_for_choosability(h, l, verdict.stats, opts.deadline)) return true;
          verdict.choosable = false;
          verdict.witness = std::move(l);
          return false;
        },
        opts.deadline);
    return finish(std::move(verdict));
  }

  // Shared-nothing workers pull tasks in canonical order; the witness from
  // the lowest-numbered task wins, so the result matches the serial run.
  const auto tasks = e.split(static_cast<std::size_t>(opts.jobs) * 8);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::vector<std::optional<ListAssignment>> found(tasks.size());
  std::vector<SearchStats> worker_stats(static_cast<std::size_t>(opts.jobs));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](int id) {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        if (i > best.load()) continue;
        e.run(
            tasks[i],
            [&](const std::vector<int>& seq) {
              if (best.load() < i) return false;
              ListAssignment l = e.to_assignment(seq);
              if (detail::colorable_for_choosability(h, l, worker_stats[static_cast<std::size_t>(id)],
                                                     opts.deadline))
                return true;
              found[i] = std::move(l);
              std::size_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              return false;
            },
            opts.deadline);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < opts.jobs; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& s : worker_stats) verdict.stats += s;
  if (const std::size_t b = best.load(); b != kNone) {
    verdict.choosable = false;
    verdict.witness = std::move(found[b]);
  }
  return finish(std::move(verdict));
}

/// Like is_k_choosable, but reports an exhausted budget as nullopt.
inline std::optional<ChoosabilityVerdict> try_is_k_choosable(const UniformHypergraph& h, int k,
                                                             const ChoosabilityOptions& opts = {}) {
  try {
    return is_k_choosable(h, k, opts);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

struct ListChromaticResult {
  int chi = 0;
  int chi_l = 0;
  /// When chi_l > chi: a failing (chi_l - 1)-list assignment.
  std::optional<ListAssignment> witness;
  /// A failing chi-list assignment, when chi_l > chi.
  std::optional<ListAssignment> witness_at_chi;
  SearchStats stats;
};

/// Smallest k >= chi(h) with h k-choosable.
inline ListChromaticResult list_chromatic_details(const UniformHypergraph& h, const ChoosabilityOptions& opts = {}) {
  ListChromaticResult out;
  out.chi = chromatic_number(h, opts.deadline);
  const int n = h.vertex_count();
  if (n == 0) return out;
  for (int k = std::max(out.chi, 1);; ++k) {
    if (k > n) throw std::logic_error("list chromatic search passed k = n");
    auto v = is_k_choosable(h, k, opts);
    out.stats += v.stats;
    if (v.choosable) {
      out.chi_l = k;
      return out;
    }
    if (k == out.chi) out.witness_at_chi = v.witness;
    out.witness = std::move(v.witness);
  }
}

inline int list_chromatic_number(const UniformHypergraph& h, const ChoosabilityOptions& opts = {}) {
  return list_chromatic_details(h, opts).chi_l;
}

// ---------------------------------------------------------------------------
// Adversarial families
// ---------------------------------------------------------------------------

struct ListInstance {
  UniformHypergraph hypergraph;
  ListAssignment lists;
};

/// K^r_{2r, r*(k-1)} with the first part ordered u1, v1, ..., ur, vr and the
/// other parts w_{i,1..r}. With disjoint colour blocks C_1..C_r of size
/// k/(r-1) (colours numbered from 1), u_j, v_j and every w_{i,j} get the
/// union of all blocks except C_j.
inline ListInstance adversarial_thm31(int r, int k) {
  if (r < 3) throw std::invalid_argument("this family needs r >= 3");
  if (k < 1 || k % (r - 1) != 0) throw std::invalid_argument("k must be a positive multiple of r-1");
  const int block = k / (r - 1);
  auto list_without = [&](int j) {  // j is 1-based
    std::vector<Color> l;
    for (int t = 1; t <= r; ++t)
      if (t != j)
        for (int i = 0; i < block; ++i) l.push_back((t - 1) * block + i + 1);
    return l;
  };
  std::vector<int> parts{2 * r};
  parts.insert(parts.end(), static_cast<std::size_t>(k - 1), r);
  std::vector<std::vector<Color>> lists;
  for (int j = 1; j <= r; ++j) {
    lists.push_back(list_without(j));  // u_j
    lists.push_back(list_without(j));  // v_j
  }
  for (int i = 2; i <= k; ++i)
    for (int j = 1; j <= r; ++j) lists.push_back(list_without(j));
  return {complete_multipartite(PartiteShape(r, std::move(parts))), ListAssignment(std::move(lists))};
}

/// K^r_{(r+1)*r} where v_{i,j} gets {1, ..., r+1} \ {j}.
inline ListInstance adversarial_thm32(int r) {
  if (r < 2) throw std::invalid_argument("edge size r must be at least 2");
  std::vector<std::vector<Color>> lists;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r + 1; ++j) {
      std::vector<Color> l;
      for (int c = 1; c <= r + 1; ++c)
        if (c != j) l.push_back(c);
      lists.push_back(std::move(l));
    }
  return {complete_multipartite(PartiteShape(r, std::vector<int>(static_cast<std::size_t>(r), r + 1))),
          ListAssignment(std::move(lists))};
}

/// Exhaustive confirmation that h has no L-colouring.
inline bool verify_not_list_colorable(const UniformHypergraph& h, const ListAssignment& l,
                                      const Deadline& deadline = Deadline::none()) {
  return !find_list_coloring(h, l, deadline).has_value();
}

/// n <= (r - 1/2) chi + r/2 - 1, evaluated in integers as
/// 2n <= (2r - 1) chi + r - 2. When true, chi_l = chi.
inline bool sufficient_bound_check(const UniformHypergraph& h) {
  const long long n = h.vertex_count();
  const long long r = h.uniformity();
  const long long chi = chromatic_number(h);
  return 2 * n <= (2 * r - 1) * chi + r - 2;
}

// ---------------------------------------------------------------------------
// Conjecture scan
// ---------------------------------------------------------------------------

/// Normalized shapes with exactly k parts (non-increasing, at most one part
/// below r-1) and at most max_vertices vertices, in lexicographically
/// decreasing order.
inline std::vector<PartiteShape> normalized_shapes(int r, int k, int max_vertices) {
  std::vector<PartiteShape> out;
  if (k < 1) return out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining_parts, int budget, int cap) -> void {
    if (remaining_parts == 0) {
      out.emplace_back(r, parts);
      return;
    }
    // Every part except possibly the last must reach r-1.
    const int min_size = remaining_parts == 1 ? 1 : std::max(1, r - 1);
    for (int p = std::min(cap, budget - (remaining_parts - 1)); p >= min_size; --p) {
      parts.push_back(p);
      self(self, remaining_parts - 1, budget - p, p);
      parts.pop_back();
    }
  };
  rec(rec, k, max_vertices, max_vertices);
  std::erase_if(out, [](const PartiteShape& s) { return !s.is_normalized(); });
  return out;
}

struct ScanEntry {
  enum class Status { ok, counterexample, skipped };

  PartiteShape shape;
  int chi = 0;
  std::optional<int> chi_l;  // absent when skipped
  Status status = Status::ok;
  std::optional<ListAssignment> witness;
  SearchStats stats;
};

struct ScanReport {
  int r = 2;
  int k_max = 1;
  std::vector<ScanEntry> entries;

  std::size_t count(ScanEntry::Status s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const ScanEntry& e) { return e.status == s; }));
  }
};

struct ScanOptions {
  double budget_seconds = 60.0;  // per shape
  int jobs = 1;
};

/// Checks chi_l = k for every normalized k-part shape with sum <= rk + r - 1,
/// k = 1..k_max. Shapes whose search outlives the budget are reported as
/// skipped. `on_entry` sees each entry as soon as it is decided.
template <class OnEntry>
ScanReport conjecture_scan(int r, int k_max, const ScanOptions& opts, OnEntry&& on_entry) {
  if (r < 2) throw std::invalid_argument("edge size r must be at least 2");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  ScanReport report{r, k_max, {}};
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& shape : normalized_shapes(r, k, r * k + r - 1)) {
      const auto h = complete_multipartite(shape);
      ScanEntry entry{shape, chromatic_number(h), std::nullopt, ScanEntry::Status::ok, std::nullopt, {}};
      if (entry.chi != k)
        throw std::logic_error("normalized shape with " + std::to_string(k) + " parts has chromatic number " +
                               std::to_string(entry.chi));
      ChoosabilityOptions co{Deadline::after(std::chrono::duration<double>(opts.budget_seconds)), opts.jobs};
      try {
        auto res = list_chromatic_details(h, co);
        entry.chi_l = res.chi_l;
        entry.stats = res.stats;
        if (res.chi_l > k) {
          entry.status = ScanEntry::Status::counterexample;
          entry.witness = res.witness_at_chi;
        }
      } catch (const BudgetExceeded&) {
        entry.status = ScanEntry::Status::skipped;
      }
      on_entry(entry);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

inline ScanReport conjecture_scan(int r, int k_max, const ScanOptions& opts = {}) {
  return conjecture_scan(r, k_max, opts, [](const ScanEntry&) {});
}

}  // namespace hyperchoose

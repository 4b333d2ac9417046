// hyperchoose: command-line driver. JSON results go to stdout, summaries to
// stderr. Exit 0 = computed, 1 = a claim failed, 2 = usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hyperchoose/hyperchoose.hpp"

namespace hc = hyperchoose;

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const hc::Json& j) { std::cout << j.dump() << '\n'; }

hc::UniformHypergraph load_target(const std::string& target, bool normalize) {
  if (target.rfind("r=", 0) == 0) {
    auto shape = hc::parse_shape(target).shape;
    return hc::complete_multipartite(normalize ? hc::normalize_shape(shape) : shape);
  }
  auto h = hc::hypergraph_from_json(hc::read_json_file(target));
  if (normalize) {
    if (!h.shape()) throw UsageError("--normalize needs a multipartite hypergraph");
    return hc::complete_multipartite(hc::normalize_shape(*h.shape()));
  }
  return h;
}

hc::ChoosabilityOptions search_options(std::optional<double> budget, int jobs) {
  hc::ChoosabilityOptions o;
  if (budget) o.deadline = hc::Deadline::after(std::chrono::duration<double>(*budget));
  o.jobs = std::max(1, jobs);
  return o;
}

hc::Json lists_json(const hc::ListAssignment& l) { return hc::Json(l.lists()); }

struct Common {
  std::string target;
  bool normalize = false;
  bool no_stats = false;
  int jobs = 1;
  std::optional<double> budget;
  std::string lists_file;
  std::string graph_file;
  std::string family;
  int r = 0;
  int k = 0;
  int kmax = 0;
  int d = 0;
  bool as_explicit = false;
};

int run_construct(const Common& c) {
  auto h = load_target(c.target, c.normalize);
  emit(hc::to_json(c.as_explicit ? h.materialized() : h));
  std::cerr << h.vertex_count() << " vertices, " << h.edge_count() << " edges\n";
  return kOk;
}

int run_chi(const Common& c) {
  const auto h = load_target(c.target, c.normalize);
  emit(hc::Json{{"chi", hc::chromatic_number(h)}});
  return kOk;
}

int run_chil(const Common& c) {
  const auto h = load_target(c.target, c.normalize);
  try {
    const auto res = hc::list_chromatic_details(h, search_options(c.budget, c.jobs));
    hc::Json out{{"chi_l", res.chi_l}, {"chi", res.chi}};
    if (res.witness) out["witness"] = lists_json(*res.witness);
    if (!c.no_stats) out["stats"] = hc::to_json(res.stats);
    emit(out);
    std::cerr << "chi = " << res.chi << ", chi_l = " << res.chi_l << " (" << res.stats.enumerated
              << " canonical assignments)\n";
  } catch (const hc::BudgetExceeded&) {
    emit(hc::Json{{"chi_l", nullptr}, {"status", "skipped"}});
    std::cerr << "budget exhausted before chi_l was settled\n";
  }
  return kOk;
}

int run_color(const Common& c) {
  const auto h = load_target(c.target, c.normalize);
  const auto l = hc::lists_from_json(hc::read_json_file(c.lists_file));
  const auto f = hc::find_list_coloring(h, l);
  hc::Json out{{"colorable", f.has_value()}};
  if (f) out["colors"] = f->colors();
  emit(out);
  return kOk;
}

int run_hall(const Common& c) {
  const auto h = load_target(c.target, c.normalize);
  const auto l = hc::lists_from_json(hc::read_json_file(c.lists_file));
  const auto res = hc::hall_color(h, l);
  hc::Json out{{"saturated", res.has_value()}};
  if (res) {
    out["colors"] = res->coloring.colors();
    hc::Json cert = hc::Json::array();
    for (auto [col, copy] : res->certificate.pairs) cert.push_back({col, copy});
    out["certificate"] = std::move(cert);
  }
  emit(out);
  return kOk;
}

hc::ListInstance build_family(const Common& c) {
  if (c.family == "thm31") return hc::adversarial_thm31(c.r, c.k);
  if (c.family == "thm32") return hc::adversarial_thm32(c.r);
  throw UsageError("unknown family '" + c.family + "' (expected thm31 or thm32)");
}

int run_adversarial(const Common& c) {
  const auto inst = build_family(c);
  emit(hc::Json{{"hypergraph", hc::to_json(inst.hypergraph)}, {"lists", lists_json(inst.lists)}});
  return kOk;
}

/// Builds the instance, refutes L-colourability exhaustively, checks chi and
/// then settles chi_l = chi + 1 by deciding (chi+1)-choosability.
int run_verify(const Common& c) {
  const auto inst = build_family(c);
  const auto& h = inst.hypergraph;
  const int expected_chi = c.family == "thm31" ? c.k : c.r;
  const auto opts = search_options(c.budget.value_or(60.0), c.jobs);

  const bool colorable = !hc::verify_not_list_colorable(h, inst.lists);
  const int chi = hc::chromatic_number(h);
  hc::Json out{{"colorable", colorable}, {"chi", chi}};
  int status = kOk;
  if (colorable) {
    std::cerr << "claim failed: the instance is L-colourable\n";
    status = kClaimFailed;
  }
  if (chi != expected_chi) {
    std::cerr << "claim failed: chi = " << chi << ", expected " << expected_chi << '\n';
    status = kClaimFailed;
  }
  if (colorable) {
    out["chi_l"] = nullptr;
  } else {
    try {
      const auto v = hc::is_k_choosable(h, chi + 1, opts);
      if (v.choosable) {
        out["chi_l"] = chi + 1;
      } else {
        out["chi_l"] = nullptr;
        out["chi_l_lower_bound"] = chi + 2;
        out["witness"] = lists_json(*v.witness);
        std::cerr << "claim failed: not " << chi + 1 << "-choosable\n";
        status = kClaimFailed;
      }
      if (!c.no_stats) out["stats"] = hc::to_json(v.stats);
    } catch (const hc::BudgetExceeded&) {
      out["chi_l"] = nullptr;
      out["chi_l_lower_bound"] = chi + 1;
      out["chi_l_status"] = "skipped";
      std::cerr << "budget exhausted deciding " << chi + 1 << "-choosability\n";
    }
  }
  emit(out);
  return status;
}

int run_scan(const Common& c) {
  hc::ScanOptions o;
  o.budget_seconds = c.budget.value_or(60.0);
  o.jobs = std::max(1, c.jobs);
  const auto report = hc::conjecture_scan(c.r, c.kmax, o, [&](const hc::ScanEntry& e) {
    emit(hc::to_json(e, !c.no_stats));
    std::cout.flush();
  });
  const auto bad = report.count(hc::ScanEntry::Status::counterexample);
  std::cerr << report.entries.size() << " shapes, " << bad << " counterexamples, "
            << report.count(hc::ScanEntry::Status::skipped) << " skipped\n";
  return bad ? kClaimFailed : kOk;
}

int run_improper(const Common& c) {
  const auto g = hc::graph_from_json(hc::read_json_file(c.graph_file));
  emit(hc::Json{{"d", c.d}, {"chi_d", hc::improper_chromatic_number(g, c.d)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic and list-chromatic numbers of complete multipartite hypergraphs"};
  app.require_subcommand(1);
  Common c;
  std::function<int(const Common&)> action;

  auto target_cmd = [&](const char* name, const char* about, int (*fn)(const Common&)) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("target", c.target, "shape string such as r=3:4*2,3, or a hypergraph JSON file")->required();
    sub->add_flag("--normalize", c.normalize, "normalize the shape first");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* construct = target_cmd("construct", "emit hypergraph JSON", run_construct);
  construct->add_flag("--explicit", c.as_explicit, "list every edge");
  target_cmd("chi", "chromatic number", run_chi);
  auto* chil = target_cmd("chil", "list chromatic number", run_chil);
  chil->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  chil->add_option("--budget", c.budget, "time limit in seconds")->check(CLI::NonNegativeNumber);
  chil->add_flag("--no-stats", c.no_stats, "omit timing statistics");
  target_cmd("color", "find or refute an L-colouring", run_color)
      ->add_option("--lists", c.lists_file, "list assignment JSON")
      ->required();
  target_cmd("hall", "Hall matching colouring", run_hall)
      ->add_option("--lists", c.lists_file, "list assignment JSON")
      ->required();

  for (const char* name : {"adversarial", "verify"}) {
    const bool verify = std::string(name) == "verify";
    auto* sub = app.add_subcommand(name, verify ? "build an adversarial instance and check its claims"
                                                : "emit an adversarial list instance");
    sub->add_option("--family", c.family, "thm31 or thm32")->required()->check(CLI::IsMember({"thm31", "thm32"}));
    sub->add_option("--r", c.r, "edge size")->required();
    sub->add_option("--k", c.k, "number of parts (thm31)");
    if (verify) {
      sub->add_option("--budget", c.budget, "time limit in seconds for the chi_l step (default 60)")->check(CLI::NonNegativeNumber);
      sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
      sub->add_flag("--no-stats", c.no_stats, "omit timing statistics");
    }
    sub->callback([&action, verify] { action = verify ? run_verify : run_adversarial; });
  }

  auto* scan = app.add_subcommand("scan", "check chi_l = k on every shape with sum p_i <= rk + r - 1");
  scan->add_option("--r", c.r, "edge size")->required();
  scan->add_option("--kmax", c.kmax, "largest number of parts")->required();
  scan->add_option("--budget", c.budget, "per-shape time limit in seconds (default 60)")->check(CLI::NonNegativeNumber);
  scan->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--no-stats", c.no_stats, "omit timing statistics");
  scan->callback([&action] { action = run_scan; });

  auto* improper = app.add_subcommand("improper", "d-improper chromatic number of a graph");
  improper->add_option("--graph", c.graph_file, "graph JSON")->required();
  improper->add_option("--d", c.d, "degree bound")->required();
  improper->callback([&action] { action = run_improper; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

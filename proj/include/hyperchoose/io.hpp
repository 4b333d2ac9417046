#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperchoose/choosability.hpp"
#include "hyperchoose/coloring.hpp"
#include "hyperchoose/hypergraph.hpp"
#include "hyperchoose/lists.hpp"

namespace hyperchoose {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Shape strings: "r=3:4*2,3" means r = 3, parts (4, 4, 3).
// ---------------------------------------------------------------------------

class ShapeSyntaxError : public std::invalid_argument {
 public:
  ShapeSyntaxError(const std::string& token, const std::string& why)
      : std::invalid_argument("bad shape token '" + token + "': " + why), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

struct ShapeSpec {
  std::string raw;
  PartiteShape shape;
};

namespace detail {

inline int parse_count(std::string_view token, std::string_view digits) {
  int value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last || digits.front() == '+' || digits.front() == '-')
    throw ShapeSyntaxError(std::string(token), "expected a positive integer");
  return value;
}

}  // namespace detail

inline ShapeSpec parse_shape(const std::string& s) {
  const std::string_view text(s);
  const auto colon = text.find(':');
  if (text.substr(0, 2) != "r=" || colon == std::string_view::npos)
    throw ShapeSyntaxError(s, "expected r=<int>:<part>[*<rep>][,...]");
  const std::string_view r_token = text.substr(0, colon);
  const int r = detail::parse_count(r_token, r_token.substr(2));
  if (r < 2) throw ShapeSyntaxError(std::string(r_token), "edge size r must be at least 2");

  std::vector<int> parts;
  std::string_view rest = text.substr(colon + 1);
  if (rest.empty()) throw ShapeSyntaxError(s, "no parts listed");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    const auto star = token.find('*');
    const int size = detail::parse_count(token, token.substr(0, star));
    int reps = 1;
    if (star != std::string_view::npos) reps = detail::parse_count(token, token.substr(star + 1));
    if (size <= 0) throw ShapeSyntaxError(std::string(token), "part sizes must be positive");
    if (reps <= 0) throw ShapeSyntaxError(std::string(token), "repetition count must be positive");
    if (reps > kMaxVertices) throw ShapeSyntaxError(std::string(token), "too many vertices");
    parts.insert(parts.end(), static_cast<std::size_t>(reps), size);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return ShapeSpec{s, PartiteShape(r, std::move(parts))};
}

/// Runs of equal parts use the p*s sugar.
inline std::string format_shape(const PartiteShape& shape) {
  std::ostringstream out;
  out << "r=" << shape.uniformity() << ':';
  const auto& p = shape.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (i) out << ',';
    out << p[i];
    if (j - i > 1) out << '*' << (j - i);
    i = j;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Json to_json(const UniformHypergraph& h) {
  Json doc;
  doc["r"] = h.uniformity();
  if (const auto* shape = h.shape()) {
    doc["rep"] = Json{{"multipartite", shape->parts()}};
  } else {
    Json edges = Json::array();
    h.for_each_edge([&](VertexMask e) {
      edges.push_back(to_vertices(e));
      return true;
    });
    doc["rep"] = Json{{"explicit", Json{{"n", h.vertex_count()}, {"edges", std::move(edges)}}}};
  }
  return doc;
}

/// {"r": int, "rep": {"multipartite": [...]} | {"explicit": {"n": int, "edges": [[...]]}}}
inline UniformHypergraph hypergraph_from_json(const Json& doc) {
  try {
    const int r = doc.at("r").get<int>();
    const Json& rep = doc.at("rep");
    if (rep.contains("multipartite")) return complete_multipartite(PartiteShape(r, rep["multipartite"].get<std::vector<int>>()));
    if (rep.contains("explicit")) {
      const Json& ex = rep["explicit"];
      return UniformHypergraph::from_edge_lists(ex.at("n").get<int>(), r,
                                                ex.at("edges").get<std::vector<std::vector<Vertex>>>());
    }
    throw DocumentError("hypergraph rep must be 'multipartite' or 'explicit'");
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed hypergraph document: ") + e.what());
  }
}

inline Json to_json(const ListAssignment& l) { return Json{{"lists", l.lists()}}; }

inline ListAssignment lists_from_json(const Json& doc) {
  try {
    return ListAssignment(doc.at("lists").get<std::vector<std::vector<Color>>>());
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed list document: ") + e.what());
  }
}

inline Json to_json(const Coloring& f) { return Json{{"colors", f.colors()}}; }

inline Coloring coloring_from_json(const Json& doc) {
  try {
    return Coloring(doc.at("colors").get<std::vector<Color>>());
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed colouring document: ") + e.what());
  }
}

/// {"n": int, "edges": [[u, v], ...]}
inline SimpleGraph graph_from_json(const Json& doc) {
  try {
    SimpleGraph g(doc.at("n").get<int>());
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DocumentError("graph edges must be [u, v] pairs");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed graph document: ") + e.what());
  }
}

inline Json to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Json to_json(const SearchStats& s) {
  return Json{{"enumerated", s.enumerated}, {"hall_decided", s.hall_decided}, {"seconds", s.seconds}};
}

inline const char* to_string(ScanEntry::Status s) {
  switch (s) {
    case ScanEntry::Status::ok: return "ok";
    case ScanEntry::Status::counterexample: return "counterexample";
    case ScanEntry::Status::skipped: return "skipped";
  }
  return "?";
}

/// One scan line: {"shape", "r", "chi", "chi_l", "status", "witness"?, "stats"?}.
inline Json to_json(const ScanEntry& e, bool with_stats) {
  Json j;
  j["shape"] = e.shape.parts();
  j["r"] = e.shape.uniformity();
  j["chi"] = e.chi;
  j["chi_l"] = e.chi_l ? Json(*e.chi_l) : Json(nullptr);
  j["status"] = to_string(e.status);
  if (e.witness) j["witness"] = e.witness->lists();
  if (with_stats) j["stats"] = to_json(e.stats);
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

}  // namespace hyperchoose

#pragma once

// JSON files for graphs, book drawings and certificates, plus DOT export.
//
// Writers are canonical: fixed key order, compact separators, one trailing
// newline, so equal values give identical bytes. Readers reject anything
// they would not write themselves, up to whitespace and key order.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "conecross/book.hpp"
#include "conecross/bounds.hpp"
#include "conecross/certificate.hpp"
#include "conecross/graph.hpp"

namespace conecross {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw FormatError(what);
}

inline void expect_format(const Json& j, const char* format) {
  expect(j.is_object(), "expected a JSON object");
  expect(j.contains("format") && j["format"] == format, std::string("expected format ") + format);
}

inline std::int64_t get_int(const Json& j, const std::string& what) {
  expect(j.is_number_integer(), what + " must be an integer");
  return j.get<std::int64_t>();
}

inline int parse_id(const std::string& key, const std::string& what) {
  expect(!key.empty() && key.size() < 10 && key.find_first_not_of("0123456789") == std::string::npos &&
             (key == "0" || key[0] != '0'),
         what + " keys must be decimal ids");
  return std::stoi(key);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs

inline Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.entries()) edges.push_back(Json::array({e.u, e.v, e.mult}));
  Json j;
  j["format"] = "conecross-graph-v1";
  j["n"] = g.n();
  j["edges"] = std::move(edges);
  return j;
}

inline Multigraph graph_from_json(const Json& j) {
  using detail::expect;
  detail::expect_format(j, "conecross-graph-v1");
  expect(j.contains("n") && j.contains("edges") && j.size() == 3, "graph needs exactly format, n, edges");
  auto n = detail::get_int(j["n"], "n");
  expect(n >= 0 && n <= 1000000, "n out of range");
  expect(j["edges"].is_array(), "edges must be an array");
  std::vector<EdgeEntry> es;
  for (const auto& e : j["edges"]) {
    expect(e.is_array() && e.size() == 3, "edge must be [u, v, mult]");
    EdgeEntry entry{static_cast<Vertex>(detail::get_int(e[0], "u")), static_cast<Vertex>(detail::get_int(e[1], "v")),
                    static_cast<int>(detail::get_int(e[2], "mult"))};
    expect(entry.u >= 0 && entry.v < n && entry.u < entry.v, "edge endpoints must satisfy 0 <= u < v < n");
    expect(entry.mult >= 1, "multiplicity must be positive");
    if (!es.empty())
      expect(std::make_pair(es.back().u, es.back().v) < std::make_pair(entry.u, entry.v),
             "edges must be sorted by (u, v) without duplicates");
    es.push_back(entry);
  }
  return Multigraph(static_cast<int>(n), es);
}

// ---------------------------------------------------------------------------
// Book drawings

inline Json book_to_json(const BookDrawing& d) {
  Json pages = Json::object();
  for (int e = 0; e < static_cast<int>(d.pages.size()); ++e) pages[std::to_string(e)] = d.pages[e];
  Json j;
  j["format"] = "conecross-book-v1";
  j["graph"] = graph_to_json(d.graph);
  j["order"] = d.order.vertices();
  j["pages"] = std::move(pages);
  return j;
}

/// The page count is one more than the largest page used.
inline BookDrawing book_from_json(const Json& j) {
  using detail::expect;
  detail::expect_format(j, "conecross-book-v1");
  expect(j.contains("graph") && j.contains("order") && j.contains("pages") && j.size() == 4,
         "book needs exactly format, graph, order, pages");
  BookDrawing d;
  d.graph = graph_from_json(j["graph"]);
  expect(j["order"].is_array(), "order must be an array");
  std::vector<Vertex> order;
  for (const auto& v : j["order"]) order.push_back(static_cast<Vertex>(detail::get_int(v, "order entry")));
  try {
    d.order = CyclicOrder(order);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  expect(j["pages"].is_object(), "pages must be an object");
  d.pages.assign(d.graph.edge_count(), -1);
  for (const auto& [key, value] : j["pages"].items()) {
    int e = detail::parse_id(key, "pages");
    expect(e < d.graph.edge_count(), "page assigned to an unknown edge");
    expect(d.pages[e] < 0, "edge assigned twice");
    auto p = detail::get_int(value, "page");
    expect(p >= 0 && p < 1000, "page out of range");
    d.pages[e] = static_cast<int>(p);
  }
  d.page_count = 1;
  for (int p : d.pages) {
    expect(p >= 0, "every edge needs a page");
    d.page_count = std::max(d.page_count, p + 1);
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return d;
}

// ---------------------------------------------------------------------------
// Certificates

inline Json certificate_to_json(const CrossingCertificate& c) {
  Json crossings = Json::array();
  for (auto [a, b] : c.crossings) crossings.push_back(Json::array({a, b}));
  Json orders = Json::object();
  for (const auto& [e, list] : c.edge_orders) orders[std::to_string(e)] = list;
  Json j;
  j["format"] = "conecross-cert-v1";
  j["crossings"] = std::move(crossings);
  j["edge_orders"] = std::move(orders);
  return j;
}

/// Structural checks against a graph are left to verify_certificate.
inline CrossingCertificate certificate_from_json(const Json& j) {
  using detail::expect;
  detail::expect_format(j, "conecross-cert-v1");
  expect(j.contains("crossings") && j.contains("edge_orders") && j.size() == 3,
         "certificate needs exactly format, crossings, edge_orders");
  expect(j["crossings"].is_array() && j["edge_orders"].is_object(), "malformed certificate");
  CrossingCertificate c;
  for (const auto& p : j["crossings"]) {
    expect(p.is_array() && p.size() == 2, "crossing must be [e1, e2]");
    auto a = detail::get_int(p[0], "edge id"), b = detail::get_int(p[1], "edge id");
    expect(a >= 0 && b >= 0 && a < (1 << 30) && b < (1 << 30), "edge id out of range");
    c.crossings.emplace_back(static_cast<EdgeId>(a), static_cast<EdgeId>(b));
  }
  for (const auto& [key, value] : j["edge_orders"].items()) {
    int e = detail::parse_id(key, "edge_orders");
    expect(value.is_array(), "edge order must be an array");
    std::vector<int> list;
    for (const auto& x : value) list.push_back(static_cast<int>(detail::get_int(x, "crossing index")));
    expect(c.edge_orders.emplace(e, std::move(list)).second, "edge order given twice");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Reports

inline Json solve_result_to_json(const SolveResult& r) {
  Json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["status"] = to_string(r.status);
  j["stats"] = {{"nodes", r.stats.nodes}, {"planarity_calls", r.stats.planarity_calls},
                {"elapsed_ms", r.stats.elapsed_ms}};
  j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
  return j;
}

inline Json bound_rows_to_json(const std::vector<BoundRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"k", r.k}, {"bound", r.bound}, {"value", r.value}, {"conditional", r.conditional}});
  return out;
}

// ---------------------------------------------------------------------------
// Text and files

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

/// Parses JSON, rejecting objects with a repeated key.
inline Json parse_json(const std::string& text) {
  std::vector<std::vector<std::string>> keys;
  auto check = [&keys](int, Json::parse_event_t event, Json& parsed) {
    if (event == Json::parse_event_t::object_start) {
      keys.emplace_back();
    } else if (event == Json::parse_event_t::object_end) {
      keys.pop_back();
    } else if (event == Json::parse_event_t::key) {
      auto key = parsed.get<std::string>();
      auto& seen = keys.back();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) throw FormatError("duplicate key " + key);
      seen.push_back(key);
    }
    return true;
  };
  try {
    return Json::parse(text, check);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

/// DOT for Graphviz. Edge instances are labelled by id; with a book drawing
/// the page is shown as colour, with a certificate the crossing indices.
inline std::string to_dot(const Multigraph& g, const std::vector<int>* pages = nullptr,
                          const CrossingCertificate* cert = nullptr) {
  static const char* colours[] = {"black", "red", "blue", "darkgreen", "orange", "purple"};
  std::vector<std::vector<int>> along;
  if (cert) along = crossings_along_edges(g, *cert);
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.instances()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.id;
    if (pages) out << " p" << (*pages)[e.id];
    if (cert && !along[e.id].empty()) {
      out << " x";
      for (int c : along[e.id]) out << ' ' << c;
    }
    out << '"';
    if (pages) out << ", color=" << colours[(*pages)[e.id] % 6];
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace conecross

#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "domeq/cnf.hpp"
#include "domeq/constructions.hpp"
#include "domeq/error.hpp"
#include "domeq/graph.hpp"
#include "domeq/recognition.hpp"

namespace domeq::io {

namespace detail {

inline std::string strip_comment(const std::string& line, char marker) {
  auto pos = line.find(marker);
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge list: "n m", then m lines "u v"; '#' starts a comment.
// ---------------------------------------------------------------------------

inline Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_comment(raw, '#');
    if (detail::blank(line)) continue;
    std::istringstream ss(line);
    long long a, b;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw ParseError("expected two integers", line_no);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError("negative vertex or edge count", line_no);
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError("more edge lines than declared", line_no);
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("endpoint out of range", line_no);
    if (a == b) throw ParseError("self-loop", line_no);
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    edge_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError("missing 'n m' header", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), line_no);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph parse_graph_file(const std::string& path) {
  auto in = detail::open(path);
  return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Instance JSON: {"n", "edges", "d", "pairs": [{"fu","fv","x"}], "labels"?}
// ---------------------------------------------------------------------------

/// Parses and checks the pair invariants (endpoints in D, D-neighbourhood of
/// every pair vertex equal to its endpoints, pairs independent and disjoint).
/// Violations throw ConstructionError naming the rule.
inline PartitionedInstance parse_instance_json(const nlohmann::json& j) {
  PartitionedInstance inst;
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw ParseError("negative 'n'", 0);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v]", 0);
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    try {
      inst.g = Graph::from_edges(n, edges);
    } catch (const EdgeListError& err) {
      throw ParseError(std::string("'edges': ") + err.what(), 0);
    }
    inst.d = VertexSet(n);
    for (const auto& v : j.at("d")) {
      const Vertex x = v.get<Vertex>();
      if (x < 0 || x >= n) throw ParseError("'d' member " + std::to_string(x) + " out of range", 0);
      inst.d.insert(x);
    }
    for (const auto& p : j.at("pairs")) {
      const auto& x = p.at("x");
      if (!x.is_array() || x.size() != 2) throw ParseError("pair 'x' must hold two vertices", 0);
      inst.pairs.push_back({p.at("fu").get<Vertex>(), p.at("fv").get<Vertex>(), {x[0].get<Vertex>(), x[1].get<Vertex>()}});
    }
    if (j.contains("labels")) {
      inst.labels = j.at("labels").get<std::vector<std::string>>();
      if (static_cast<int>(inst.labels.size()) != n) throw ParseError("'labels' must have one entry per vertex", 0);
    }
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("instance JSON: ") + err.what(), 0);
  }
  for (const auto& failure : validate_h(inst).failures) {
    switch (failure.kind) {
      case HFailureKind::kPairEndpoint:
      case HFailureKind::kPairVertexInD:
      case HFailureKind::kPairVertexReused:
      case HFailureKind::kDuplicatePair:
      case HFailureKind::kPairNeighborhood:
      case HFailureKind::kPairAdjacent:
        throw ConstructionError(to_string(failure.kind), failure.message);
      default:
        break;
    }
  }
  return inst;
}

inline PartitionedInstance parse_instance(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 0);
  }
  return parse_instance_json(j);
}

inline PartitionedInstance parse_instance_file(const std::string& path) {
  auto in = detail::open(path);
  return parse_instance(in);
}

inline nlohmann::json instance_to_json(const PartitionedInstance& inst) {
  nlohmann::json j;
  j["n"] = inst.g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : inst.g.edges()) j["edges"].push_back({u, v});
  j["d"] = inst.d.members();
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : inst.pairs) j["pairs"].push_back({{"fu", p.fu}, {"fv", p.fv}, {"x", {p.x[0], p.x[1]}}});
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  return j;
}

/// One field per line, arrays kept on a single line.
inline std::string serialize_instance(const PartitionedInstance& inst) {
  const auto j = instance_to_json(inst);
  std::string out = "{\n";
  const char* keys[] = {"n", "edges", "d", "pairs", "labels"};
  bool first = true;
  for (const char* key : keys) {
    if (!j.contains(key)) continue;
    if (!first) out += ",\n";
    first = false;
    out += "  \"" + std::string(key) + "\": " + j.at(key).dump();
  }
  return out + "\n}\n";
}

// ---------------------------------------------------------------------------
// DIMACS CNF restricted to 3 distinct variables per clause.
// ---------------------------------------------------------------------------

inline CnfFormula parse_cnf(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  long long num_vars = -1, num_clauses = -1;
  std::vector<Clause> clauses;
  std::vector<long long> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    if (detail::blank(raw)) continue;
    std::istringstream ss(raw);
    std::string head;
    ss >> head;
    if (head == "c") continue;
    if (head == "%") break;
    if (head == "p") {
      std::string fmt, extra;
      if (num_vars >= 0) throw ParseError("duplicate problem line", line_no);
      if (!(ss >> fmt >> num_vars >> num_clauses) || fmt != "cnf" || (ss >> extra)) {
        throw ParseError("expected 'p cnf <vars> <clauses>'", line_no);
      }
      if (num_vars < 0 || num_clauses < 0) throw ParseError("negative counts in problem line", line_no);
      continue;
    }
    if (num_vars < 0) throw ParseError("clause before problem line", line_no);
    std::istringstream lits(raw);
    std::string tok;
    while (lits >> tok) {
      long long lit;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", line_no);
      }
      if (lit != 0) {
        if (lit > num_vars || -lit > num_vars) throw ParseError("literal " + tok + " out of range", line_no);
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw ParseError("clause has " + std::to_string(pending.size()) + " literals, expected 3", line_no);
      }
      Clause c;
      for (int i = 0; i < 3; ++i) c[i] = {static_cast<int>(pending[i] < 0 ? -pending[i] : pending[i]), pending[i] > 0};
      if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
        throw ParseError("clause repeats a variable", line_no);
      }
      clauses.push_back(c);
      pending.clear();
    }
  }
  if (num_vars < 0) throw ParseError("missing problem line", line_no);
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0", line_no);
  if (static_cast<long long>(clauses.size()) != num_clauses) {
    throw ParseError("declared " + std::to_string(num_clauses) + " clauses, found " + std::to_string(clauses.size()),
                     line_no);
  }
  try {
    return CnfFormula(static_cast<int>(num_vars), std::move(clauses));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(err.what(), 0);
  }
}

inline CnfFormula parse_cnf_file(const std::string& path) {
  auto in = detail::open(path);
  return parse_cnf(in);
}

inline std::string serialize_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& lit : c) out << (lit.positive ? lit.var : -lit.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace domeq::io

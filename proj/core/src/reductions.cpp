#include "tokslide/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "tokslide/io.hpp"

namespace tokslide {

namespace {

std::string leaf_name(std::size_t i, int j) { return "v" + std::to_string(i + 1) + "^" + std::to_string(j); }
std::string root_name(std::size_t i) { return "v" + std::to_string(i + 1); }
std::string q_name(int j) { return "q" + std::to_string(j); }

// Picks a name not already in use, appending primes if needed.
std::string fresh(const std::vector<std::string>& names, std::string base) {
  while (std::find(names.begin(), names.end(), base) != names.end()) base += "'";
  return base;
}

}  // namespace

void validate(const X3CInstance& x) {
  if (x.universe_size <= 0 || x.universe_size % 3 != 0) {
    throw InputError("x3c universe size must be a positive multiple of 3");
  }
  for (std::size_t i = 0; i < x.family.size(); ++i) {
    auto s = x.family[i];
    for (int e : s) {
      if (e < 1 || e > x.universe_size) {
        throw InputError("x3c set " + std::to_string(i + 1) + " has an element outside the universe");
      }
    }
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) {
      throw InputError("x3c set " + std::to_string(i + 1) + " repeats an element");
    }
  }
}

X3CInstance parse_x3c(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  X3CInstance x;
  long declared = -1;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string& msg) {
      throw InputError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (!header) {
      if (word != "x3c") fail("expected 'x3c <3n> <m>' header");
      if (!(ls >> x.universe_size >> declared) || declared < 0) fail("malformed x3c header");
      if (ls >> word) fail("trailing input after header");
      header = true;
    } else {
      std::array<int, 3> s{};
      std::istringstream all(line);
      if (!(all >> s[0] >> s[1] >> s[2])) fail("expected three element indices");
      if (all >> word) fail("trailing input after three elements");
      x.family.push_back(s);
    }
  }
  if (!header) throw InputError("missing x3c header");
  if (static_cast<long>(x.family.size()) != declared) {
    throw InputError("x3c header declares " + std::to_string(declared) + " sets, found " +
                     std::to_string(x.family.size()));
  }
  validate(x);
  return x;
}

std::string format_x3c(const X3CInstance& x) {
  std::ostringstream os;
  os << "x3c " << x.universe_size << ' ' << x.family.size() << '\n';
  for (const auto& s : x.family) os << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
  return os.str();
}

DiscoveryInstance x3c_to_vcd(const X3CInstance& x) {
  validate(x);
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 0; j <= x.universe_size; ++j) {
    names.push_back(q_name(j));
    for (int i = 0; i < j; ++i) edges.emplace_back(q_name(i), q_name(j));
  }
  std::vector<std::string> leaves;
  for (std::size_t i = 0; i < x.family.size(); ++i) {
    std::vector<std::string> star{root_name(i)};
    for (int j = 1; j <= 4; ++j) {
      star.push_back(leaf_name(i, j));
      leaves.push_back(star.back());
      edges.emplace_back(star.front(), star.back());
    }
    for (const auto& v : star) {
      names.push_back(v);
      for (int e : x.family[i]) edges.emplace_back(v, q_name(e));
    }
  }
  DiscoveryInstance inst;
  inst.graph = Graph::build(std::move(names), edges);
  inst.problem = Problem::VertexCover;
  inst.start = names_to_set(inst.graph, leaves);
  inst.budget = 4 * x.n();
  if (!is_connected(inst.graph) || !is_chordal(inst.graph)) {
    throw Error("x3c construction produced a graph that is not connected and chordal");
  }
  return inst;
}

MoveSequence x3c_witness_to_moves(const X3CInstance& x, const std::vector<std::size_t>& cover) {
  validate(x);
  std::vector<int> hits(static_cast<std::size_t>(x.universe_size) + 1, 0);
  for (std::size_t i : cover) {
    if (i >= x.family.size()) throw InputError("cover refers to set " + std::to_string(i + 1) + " which does not exist");
    for (int e : x.family[i]) ++hits[static_cast<std::size_t>(e)];
  }
  for (int e = 1; e <= x.universe_size; ++e) {
    if (hits[static_cast<std::size_t>(e)] != 1) {
      throw InputError("cover is not exact: element " + std::to_string(e) + " covered " +
                       std::to_string(hits[static_cast<std::size_t>(e)]) + " times");
    }
  }
  // Built once so names resolve to the same indices as x3c_to_vcd.
  DiscoveryInstance inst = x3c_to_vcd(x);
  const Graph& g = inst.graph;
  std::vector<std::size_t> order = cover;
  std::sort(order.begin(), order.end());
  MoveSequence moves;
  for (std::size_t i : order) {
    auto s = x.family[i];
    std::sort(s.begin(), s.end());
    for (int j = 0; j < 3; ++j) moves.push_back({g.index(leaf_name(i, j + 2)), g.index(q_name(s[static_cast<std::size_t>(j)]))});
    moves.push_back({g.index(leaf_name(i, 1)), g.index(root_name(i))});
  }
  return moves;
}

DiscoveryInstance vcd_to_fvsd(const DiscoveryInstance& inst) {
  if (inst.problem != Problem::VertexCover) throw InputError("triangulation expects a vertex cover instance");
  const Graph& g = inst.graph;
  std::vector<std::string> names = g.names();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) {
    edges.emplace_back(e.u, e.v);
    names.push_back(fresh(names, "e_" + g.name(e.u) + "_" + g.name(e.v)));
    auto w = static_cast<VertexId>(names.size() - 1);
    edges.emplace_back(e.u, w);
    edges.emplace_back(e.v, w);
  }
  DiscoveryInstance out;
  out.graph = Graph::from_indices(std::move(names), edges);
  out.problem = Problem::FeedbackVertexSet;
  out.start = inst.start;
  out.budget = inst.budget;
  return out;
}

std::pair<Graph, int> diameterize_vc(const Graph& g, int k) {
  std::vector<std::string> names = g.names();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  names.push_back(fresh(names, "u"));
  auto u = static_cast<VertexId>(names.size() - 1);
  for (VertexId v = 0; v < u; ++v) edges.emplace_back(v, u);
  return {Graph::from_indices(std::move(names), edges), k + 1};
}

std::pair<Graph, int> diameterize_fvs(const Graph& g, int k) {
  std::vector<std::string> names = g.names();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  names.push_back(fresh(names, "s"));
  auto s = static_cast<VertexId>(names.size() - 1);
  for (VertexId v = 0; v < s; ++v) edges.emplace_back(v, s);
  for (int i = 1; i <= k + 2; ++i) {
    std::string base = names[s] + std::to_string(i) + "^";
    names.push_back(fresh(names, base + "1"));
    names.push_back(fresh(names, base + "2"));
    auto a = static_cast<VertexId>(names.size() - 2);
    auto b = static_cast<VertexId>(names.size() - 1);
    edges.emplace_back(s, a);
    edges.emplace_back(s, b);
    edges.emplace_back(a, b);
  }
  return {Graph::from_indices(std::move(names), edges), k + 1};
}

DiscoveryInstance search_to_discovery(const Graph& g, Problem problem, int k, const Configuration& placement) {
  if (k < 0 || placement.size() != static_cast<std::size_t>(k)) {
    throw InputError("placement has " + std::to_string(placement.size()) + " vertices, expected " + std::to_string(k));
  }
  DiscoveryInstance inst{g, problem, placement, 0};
  require_solvable(inst);
  inst.budget = k * diameter(g);
  return inst;
}

}  // namespace tokslide

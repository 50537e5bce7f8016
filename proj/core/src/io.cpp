#include "tokslide/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "tokslide/error.hpp"

namespace tokslide::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string w; is >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw InputError("line " + std::to_string(line.number) + ": " + msg);
}

long long to_int(const Line& line, const std::string& word) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) fail(line, "expected an integer, got '" + word + "'");
  return value;
}

struct Document {
  Graph graph;
  std::optional<Problem> problem;
  std::optional<std::vector<std::string>> tokens;
  std::optional<long long> budget;
};

Document parse_document(std::string_view text, bool allow_instance_lines) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty input: expected 'graph <n> <m>'");
  const Line& header = lines.front();
  if (header.words.size() != 3 || header.words[0] != "graph") fail(header, "expected 'graph <n> <m>'");
  const long long n = to_int(header, header.words[1]);
  const long long m = to_int(header, header.words[2]);
  if (n < 0 || m < 0) fail(header, "negative vertex or edge count");

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  Document doc;
  std::size_t i = 1;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& w = line.words;
    if (w[0] == "v") {
      if (w.size() != 2) fail(line, "expected 'v <name>'");
      if (!edges.empty()) fail(line, "vertex declared after edges");
      names.push_back(w[1]);
    } else if (w[0] == "e") {
      if (w.size() != 3) fail(line, "expected 'e <name> <name>'");
      edges.emplace_back(w[1], w[2]);
    } else {
      break;
    }
  }
  if (static_cast<long long>(names.size()) != n) {
    throw InputError("header declares " + std::to_string(n) + " vertices, found " + std::to_string(names.size()));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  doc.graph = Graph::build(std::move(names), edges);

  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& w = line.words;
    if (!allow_instance_lines && (w[0] == "problem" || w[0] == "tokens" || w[0] == "budget")) {
      fail(line, "unexpected '" + w[0] + "' in a graph file");
    }
    if (w[0] == "problem") {
      if (w.size() != 2) fail(line, "expected 'problem VC|IS|DS|FVS'");
      if (doc.problem) fail(line, "duplicate 'problem' line");
      try {
        doc.problem = parse_problem(w[1]);
      } catch (const InputError& e) {
        fail(line, e.what());
      }
    } else if (w[0] == "tokens") {
      if (doc.tokens) fail(line, "duplicate 'tokens' line");
      doc.tokens.emplace(w.begin() + 1, w.end());
    } else if (w[0] == "budget") {
      if (w.size() != 2) fail(line, "expected 'budget <int>'");
      if (doc.budget) fail(line, "duplicate 'budget' line");
      doc.budget = to_int(line, w[1]);
      if (*doc.budget < 0) fail(line, "budget must be non-negative");
    } else {
      fail(line, "unexpected keyword '" + w[0] + "'");
    }
  }
  return doc;
}

}  // namespace

Graph parse_graph(std::string_view text, bool allow_instance_lines) {
  return parse_document(text, allow_instance_lines).graph;
}

DiscoveryInstance parse_instance(std::string_view text) {
  Document doc = parse_document(text, true);
  if (!doc.problem) throw InputError("instance is missing a 'problem' line");
  if (!doc.tokens) throw InputError("instance is missing a 'tokens' line");
  if (!doc.budget) throw InputError("instance is missing a 'budget' line");
  if (*doc.budget > std::numeric_limits<int>::max()) throw InputError("budget too large");
  DiscoveryInstance inst;
  inst.start = names_to_set(doc.graph, *doc.tokens);
  inst.graph = std::move(doc.graph);
  inst.problem = *doc.problem;
  inst.budget = static_cast<int>(*doc.budget);
  return inst;
}

MoveSequence parse_moves(std::string_view text, const Graph& g) {
  MoveSequence seq;
  for (const Line& line : tokenize(text)) {
    const auto& w = line.words;
    if (w.size() != 3 || w[0] != "move") fail(line, "expected 'move <from> <to>'");
    auto from = g.find(w[1]);
    auto to = g.find(w[2]);
    if (!from) fail(line, "unknown vertex '" + w[1] + "'");
    if (!to) fail(line, "unknown vertex '" + w[2] + "'");
    seq.push_back({*from, *to});
  }
  return seq;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.order() << ' ' << g.size() << '\n';
  for (const auto& nm : g.names()) os << "v " << nm << '\n';
  for (const auto& e : g.edges()) os << "e " << g.name(e.u) << ' ' << g.name(e.v) << '\n';
  return os.str();
}

std::string format_instance(const DiscoveryInstance& inst) {
  std::ostringstream os;
  os << format_graph(inst.graph);
  os << "problem " << to_string(inst.problem) << '\n';
  os << "tokens";
  for (VertexId v : inst.start) os << ' ' << inst.graph.name(v);
  os << '\n';
  os << "budget " << inst.budget << '\n';
  return os.str();
}

std::string format_moves(const Graph& g, const MoveSequence& seq) {
  std::ostringstream os;
  for (const auto& mv : seq) os << "move " << g.name(mv.from) << ' ' << g.name(mv.to) << '\n';
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
}

}  // namespace tokslide::io

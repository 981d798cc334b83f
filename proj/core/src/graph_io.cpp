#include "ptlab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line with at least one token after stripping comments.
  std::optional<Line> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
      if (!tokens.empty()) return Line{number_, std::move(tokens)};
    }
    return std::nullopt;
  }

  std::size_t line_number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  return value;
}

struct Header {
  std::size_t n;
  std::size_t m;
  bool directed;
  std::size_t line;
};

Header read_header(LineReader& reader) {
  auto line = reader.next();
  if (!line) throw ParseError("missing header line 'n m'", reader.line_number());
  const auto& t = line->tokens;
  if (t.size() != 2 && !(t.size() == 3 && t[2] == "directed")) {
    throw ParseError("header must be 'n m' or 'n m directed'", line->number);
  }
  return Header{parse_index(t[0], line->number), parse_index(t[1], line->number), t.size() == 3,
                line->number};
}

std::vector<std::pair<std::size_t, std::pair<Vertex, Vertex>>> read_pairs(LineReader& reader,
                                                                          const Header& h) {
  std::vector<std::pair<std::size_t, std::pair<Vertex, Vertex>>> pairs;
  pairs.reserve(h.m);
  while (auto line = reader.next()) {
    if (line->tokens.size() != 2) throw ParseError("expected 'u v'", line->number);
    if (pairs.size() == h.m) throw ParseError("more edges than declared in header", line->number);
    const Vertex u = parse_index(line->tokens[0], line->number);
    const Vertex v = parse_index(line->tokens[1], line->number);
    if (u >= h.n || v >= h.n) throw ParseError("vertex index out of range", line->number);
    if (u == v) throw ParseError("self-loop", line->number);
    pairs.push_back({line->number, {u, v}});
  }
  if (pairs.size() != h.m) {
    throw ParseError("header declares " + std::to_string(h.m) + " edges but found " +
                         std::to_string(pairs.size()),
                     reader.line_number());
  }
  return pairs;
}

Graph graph_body(LineReader& reader, const Header& h) {
  GraphBuilder b(h.n);
  for (const auto& [line, uv] : read_pairs(reader, h)) {
    const auto [u, v] = uv;
    if (u > v) throw ParseError("edge must be written with u < v", line);
    if (!b.add_edge(u, v)) throw ParseError("duplicate edge", line);
  }
  return b.build();
}

Digraph digraph_body(LineReader& reader, const Header& h) {
  std::vector<Arc> arcs;
  std::vector<Bitset> seen(h.n, Bitset(h.n));
  for (const auto& [line, uv] : read_pairs(reader, h)) {
    const auto [u, v] = uv;
    if (seen[u].test(v)) throw ParseError("duplicate arc", line);
    seen[u].set(v);
    arcs.emplace_back(u, v);
  }
  return Digraph::from_arcs(h.n, arcs);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  const Header h = read_header(reader);
  if (h.directed) throw ParseError("expected an undirected graph header", h.line);
  return graph_body(reader, h);
}

Digraph read_digraph(std::istream& in) {
  LineReader reader(in);
  const Header h = read_header(reader);
  if (!h.directed) throw ParseError("expected a 'directed' header", h.line);
  return digraph_body(reader, h);
}

std::variant<Graph, Digraph> read_any(std::istream& in) {
  LineReader reader(in);
  const Header h = read_header(reader);
  if (h.directed) return digraph_body(reader, h);
  return graph_body(reader, h);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << " directed\n";
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

Digraph load_digraph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_digraph(in);
}

std::variant<Graph, Digraph> load_any(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_any(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void save_digraph(const std::filesystem::path& path, const Digraph& d) {
  auto out = open_out(path);
  write_digraph(out, d);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace ptlab

#include <charconv>
#include <map>
#include <sstream>

#include "splice_alex/error.hpp"
#include "splice_alex/splice_diagram.hpp"

namespace splice_alex {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;
};

struct PendingEdge {
  std::size_t line = 0;
  Token a;
  Token b;
  std::optional<std::int64_t> weight_a;
  std::optional<std::int64_t> weight_b;
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw SyntaxError(line_, column, message);
  }

  void expect_arity(std::size_t n, std::string_view usage) const {
    if (tokens_.size() == n) return;
    const std::size_t column = tokens_.size() > n ? tokens_[n].column : end_column();
    fail(column, "expected `" + std::string(usage) + "`");
  }

  const Token& at(std::size_t i) const { return tokens_[i]; }

  std::int64_t integer(std::size_t i) const {
    std::string_view s = at(i).text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      fail(at(i).column, "expected a decimal integer, got `" + std::string(at(i).text) + "`");
    }
    return value;
  }

  std::optional<std::int64_t> weight(std::size_t i) const {
    if (at(i).text == "_") return std::nullopt;
    return integer(i);
  }

 private:
  std::size_t end_column() const {
    if (tokens_.empty()) return 1;
    return tokens_.back().column + tokens_.back().text.size();
  }

  std::size_t line_;
  std::vector<Token> tokens_;
};

}  // namespace

SpliceDiagram parse_diagram(std::string_view text) {
  std::vector<Vertex> vertices;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<PendingEdge> pending;
  bool header_seen = false;
  bool twists_seen = false;
  bool uniform_twists = true;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineParser p(line_no, tokens);
    const std::string_view directive = tokens.front().text;

    if (!header_seen) {
      if (directive != "splice") p.fail(tokens.front().column, "expected header `splice v1`");
      p.expect_arity(2, "splice v1");
      if (p.at(1).text != "v1") p.fail(p.at(1).column, "unsupported format version");
      header_seen = true;
      continue;
    }

    if (directive == "uniform_twists") {
      p.expect_arity(2, "uniform_twists true|false");
      if (twists_seen) p.fail(p.at(0).column, "uniform_twists given twice");
      if (p.at(1).text == "true") {
        uniform_twists = true;
      } else if (p.at(1).text == "false") {
        uniform_twists = false;
      } else {
        p.fail(p.at(1).column, "expected true or false");
      }
      twists_seen = true;
    } else if (directive == "vertex") {
      if (tokens.size() < 3) p.expect_arity(3, "vertex <id> node|leaf|arrow <m>");
      Vertex v;
      v.id = std::string(p.at(1).text);
      const std::string_view kind = p.at(2).text;
      if (kind == "node") {
        p.expect_arity(3, "vertex <id> node");
        v.kind = VertexKind::Node;
      } else if (kind == "leaf") {
        p.expect_arity(3, "vertex <id> leaf");
        v.kind = VertexKind::Leaf;
      } else if (kind == "arrow") {
        p.expect_arity(4, "vertex <id> arrow <multiplicity>");
        v.kind = VertexKind::Arrowhead;
        v.multiplicity = p.integer(3);
      } else {
        p.fail(p.at(2).column, "unknown vertex kind `" + std::string(kind) + "`");
      }
      if (index.contains(v.id)) {
        throw Error(ErrorCode::DuplicateVertexId,
                    "vertex `" + v.id + "` declared again on line " + std::to_string(line_no));
      }
      index.emplace(v.id, vertices.size());
      vertices.push_back(std::move(v));
    } else if (directive == "edge") {
      p.expect_arity(5, "edge <id> <id> <weight|_> <weight|_>");
      pending.push_back({line_no, p.at(1), p.at(2), p.weight(3), p.weight(4)});
    } else {
      p.fail(tokens.front().column, "unknown directive `" + std::string(directive) + "`");
    }
  }

  if (!header_seen) throw SyntaxError(line_no, 1, "empty input; expected header `splice v1`");
  if (vertices.empty()) throw SyntaxError(line_no, 1, "diagram declares no vertices");

  std::vector<Edge> edges;
  for (const auto& e : pending) {
    auto resolve = [&](const Token& t) {
      auto it = index.find(t.text);
      if (it == index.end()) {
        throw Error(ErrorCode::UnknownVertexReference, "line " + std::to_string(e.line) + ", column " +
                                                           std::to_string(t.column) + ": no vertex `" +
                                                           std::string(t.text) + "`");
      }
      return it->second;
    };
    edges.push_back({resolve(e.a), resolve(e.b), e.weight_a, e.weight_b});
  }
  return SpliceDiagram(std::move(vertices), std::move(edges), uniform_twists);
}

std::string serialize(const SpliceDiagram& d) {
  std::ostringstream os;
  os << "splice v1\n";
  os << "uniform_twists " << (d.uniform_twists() ? "true" : "false") << '\n';
  for (const auto& v : d.vertices()) {
    os << "vertex " << v.id << ' ';
    switch (v.kind) {
      case VertexKind::Node: os << "node"; break;
      case VertexKind::Leaf: os << "leaf"; break;
      case VertexKind::Arrowhead: os << "arrow " << v.multiplicity; break;
    }
    os << '\n';
  }
  auto weight = [](const std::optional<std::int64_t>& w) { return w ? std::to_string(*w) : std::string("_"); };
  for (const auto& e : d.edges()) {
    os << "edge " << d.vertices()[e.a].id << ' ' << d.vertices()[e.b].id << ' ' << weight(e.weight_a) << ' '
       << weight(e.weight_b) << '\n';
  }
  return os.str();
}

}  // namespace splice_alex

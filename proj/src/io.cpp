#include "genpos/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace genpos {
namespace {

constexpr int kOffset = 63;
constexpr int kMaxShort = 62;
constexpr int kMaxOrder = 258047;

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) throw Error(ErrorCode::MalformedHeader, "byte outside the graph6 range");
  return v;
}

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_line(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");
  std::size_t pos = 0;
  int n = 0;
  if (line[0] == '~') {
    if (line.size() < 4 || line[1] == '~') throw Error(ErrorCode::MalformedHeader, "unsupported graph6 order header");
    n = sextet(line[1]) << 12 | sextet(line[2]) << 6 | sextet(line[3]);
    if (n <= kMaxShort) throw Error(ErrorCode::MalformedHeader, "long header for a short order");
    pos = 4;
  } else {
    n = sextet(line[0]);
    pos = 1;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t available = line.size() - pos;
  if (available < bytes) throw Error(ErrorCode::MalformedHeader, "graph6 body shorter than the order requires");
  if (available > bytes) throw Error(ErrorCode::TrailingBits, "bytes after the graph6 body");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6]);
      if (chunk >> (5 - k % 6) & 1) b.add_edge(i, j);
    }
  for (; k < bytes * 6; ++k)
    if (sextet(line[pos + k / 6]) >> (5 - k % 6) & 1) throw Error(ErrorCode::TrailingBits, "nonzero graph6 padding");
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "graph6 order limit exceeded");
  std::string out;
  if (n <= kMaxShort) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + kOffset));
    out.push_back(static_cast<char>((n >> 6 & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int chunk = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = chunk << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((chunk << (6 - used)) + kOffset));
  return out;
}

namespace {

int parse_int(std::string_view tok) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) throw Error(ErrorCode::BadToken, "not an integer: '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool skippable(const std::vector<std::string_view>& toks) { return toks.empty() || toks[0].starts_with('#'); }

}  // namespace

Graph parse_edgelist(std::string_view text) {
  std::optional<GraphBuilder> b;
  for (auto line : lines_of(text)) {
    const auto toks = split_ws(line);
    if (skippable(toks)) continue;
    if (!b) {
      if (toks.size() != 2 || toks[0] != "n") throw Error(ErrorCode::BadToken, "expected header 'n <count>'");
      const int n = parse_int(toks[1]);
      if (n < 0) throw Error(ErrorCode::BadToken, "negative vertex count");
      b.emplace(n);
      continue;
    }
    if (toks.size() != 2) throw Error(ErrorCode::BadToken, "expected 'u v', got '" + std::string(line) + "'");
    const int u = parse_int(toks[0]), v = parse_int(toks[1]);
    if (u < 0 || v < 0 || u >= b->order() || v >= b->order())
      throw Error(ErrorCode::VertexOutOfRange, std::to_string(u) + " " + std::to_string(v));
    b->add_edge(u, v);  // SelfLoop propagates
  }
  if (!b) throw Error(ErrorCode::BadToken, "missing header 'n <count>'");
  return std::move(*b).build();
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> out;
  std::string line;
  if (format == GraphFormat::Graph6) {
    while (std::getline(in, line))
      if (!trim_line(line).empty()) out.push_back(parse_graph6(line));
    return out;
  }
  std::string chunk;
  bool started = false;
  auto flush = [&] {
    if (started) out.push_back(parse_edgelist(chunk));
    chunk.clear();
  };
  while (std::getline(in, line)) {
    const auto toks = split_ws(line);
    if (!toks.empty() && toks[0] == "n") {
      flush();
      started = true;
    } else if (!started && !skippable(toks)) {
      throw Error(ErrorCode::BadToken, "edge before 'n <count>' header");
    }
    chunk += line;
    chunk += '\n';
  }
  flush();
  return out;
}

std::string emit(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? emit_graph6(g) + "\n" : emit_edgelist(g);
}

}  // namespace genpos

#include "cubicpm/formats.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cubicpm {
namespace {

std::string where(long line, long byte) {
  std::string s = "line " + std::to_string(line);
  if (byte >= 0) s += ", byte " + std::to_string(byte);
  return s;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

// Six-bit groups of graph6/sparse6 after the size field.
class BitReader {
 public:
  BitReader(std::string_view data, long line, std::size_t offset)
      : data_(data), line_(line), offset_(offset) {}

  std::size_t remaining() const { return data_.size() * 6 - pos_; }

  unsigned bit() {
    const std::size_t index = pos_ / 6;
    const unsigned value = byte_value(index);
    const unsigned b = (value >> (5 - pos_ % 6)) & 1U;
    ++pos_;
    return b;
  }

  std::uint64_t bits(int k) {
    std::uint64_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bit();
    return x;
  }

 private:
  unsigned byte_value(std::size_t index) const {
    const unsigned char c = static_cast<unsigned char>(data_[index]);
    if (c < 63 || c > 126)
      throw ParseError("invalid character in graph string", line_, static_cast<long>(offset_ + index));
    return c - 63U;
  }

  std::string_view data_;
  long line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// N(n) of the graph6 family: returns n and advances `pos`.
std::uint64_t read_size(std::string_view s, std::size_t& pos, long line) {
  auto take = [&](int count) {
    std::uint64_t x = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError("truncated size field", line, static_cast<long>(pos));
      const unsigned char c = static_cast<unsigned char>(s[pos]);
      if (c < 63 || c > 126) throw ParseError("invalid character in size field", line, static_cast<long>(pos));
      x = (x << 6) | (c - 63U);
      ++pos;
    }
    return x;
  };
  if (pos >= s.size()) throw ParseError("missing size field", line, static_cast<long>(pos));
  if (s[pos] != 126) return take(1);
  ++pos;
  if (pos < s.size() && s[pos] == 126) {
    ++pos;
    return take(6);
  }
  return take(3);
}

void write_size(std::string& out, std::uint64_t n) {
  auto put = [&](int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63U)));
  };
  if (n <= 62) {
    put(1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put(6);
  }
}

void push_bits(std::vector<bool>& bits, std::uint64_t x, int k) {
  for (int i = k - 1; i >= 0; --i) bits.push_back((x >> i) & 1U);
}

void pack(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    unsigned v = 0;
    for (std::size_t j = 0; j < 6; ++j) v = (v << 1) | (i + j < bits.size() && bits[i + j] ? 1U : 0U);
    out.push_back(static_cast<char>(63 + v));
  }
}

constexpr int kMaxParsedVertices = 1 << 20;

int checked_order(std::uint64_t n, long line) {
  if (n > kMaxParsedVertices) throw ParseError("graph too large", line);
  return static_cast<int>(n);
}

int bits_for(int n) {
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

ParseError::ParseError(const std::string& message, long line, long byte)
    : std::runtime_error(message + " (" + where(line, byte) + ")"), line_(line), byte_(byte) {}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge_list") return GraphFormat::edge_list;
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "sparse6") return GraphFormat::sparse6;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

const char* to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::edge_list: return "edge_list";
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::sparse6: return "sparse6";
  }
  return "?";
}

GraphFormat format_for_path(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".g6")) return GraphFormat::graph6;
  if (ends_with(".s6")) return GraphFormat::sparse6;
  return GraphFormat::edge_list;
}

std::vector<MultiGraph> read_edge_lists(std::istream& in) {
  std::vector<MultiGraph> out;
  std::string text;
  long line_no = 0;
  // next meaningful line split into integers
  auto next_numbers = [&](std::vector<long long>& nums) {
    while (std::getline(in, text)) {
      ++line_no;
      std::string_view v = strip(text);
      std::size_t first = v.find_first_not_of(" \t");
      if (first == std::string_view::npos || v[first] == '#') continue;
      nums.clear();
      std::istringstream ss{std::string(v)};
      long long x = 0;
      while (ss >> x) nums.push_back(x);
      if (!ss.eof()) throw ParseError("expected integers", line_no, static_cast<long>(ss.tellg()));
      return true;
    }
    return false;
  };
  std::vector<long long> nums;
  while (next_numbers(nums)) {
    if (nums.size() != 2) throw ParseError("expected header \"n m\"", line_no);
    const long long n = nums[0];
    const long long m = nums[1];
    if (n < 0 || m < 0 || n > kMaxParsedVertices) throw ParseError("invalid vertex or edge count", line_no);
    const long header = line_no;
    std::vector<std::pair<int, int>> pairs;
    for (long long i = 0; i < m; ++i) {
      if (!next_numbers(nums)) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), header);
      if (nums.size() != 2) throw ParseError("expected edge \"u v\"", line_no);
      if (nums[0] < 0 || nums[0] >= n || nums[1] < 0 || nums[1] >= n) throw ParseError("vertex id out of range", line_no);
      if (nums[0] == nums[1]) throw ParseError("loops are not allowed", line_no);
      pairs.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    out.push_back(MultiGraph::from_edge_list(static_cast<int>(n), pairs));
  }
  return out;
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

MultiGraph parse_graph6(std::string_view text, long line) {
  text = strip(text);
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  const int n = checked_order(read_size(text, pos, line), line);
  const std::uint64_t needed = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = static_cast<std::size_t>((needed + 5) / 6);
  if (text.size() - pos < bytes) throw ParseError("truncated graph6 string", line, static_cast<long>(text.size()));
  if (text.size() - pos > bytes) throw ParseError("trailing bytes in graph6 string", line, static_cast<long>(pos + bytes));
  BitReader reader(text.substr(pos), line, pos);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (reader.bit()) pairs.emplace_back(i, j);
  return MultiGraph::from_edge_list(n, pairs);
}

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw GraphError("graph6 cannot store parallel edges");
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  std::string out;
  write_size(out, static_cast<std::uint64_t>(n));
  std::vector<bool> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0);
  pack(out, bits);
  return out;
}

MultiGraph parse_sparse6(std::string_view text, long line) {
  text = strip(text);
  std::size_t pos = 0;
  if (text.starts_with(">>sparse6<<")) pos = 11;
  if (pos < text.size() && text[pos] == ';') throw ParseError("incremental sparse6 is not supported", line, static_cast<long>(pos));
  if (pos >= text.size() || text[pos] != ':') throw ParseError("sparse6 string must start with ':'", line, static_cast<long>(pos));
  ++pos;
  const int n = checked_order(read_size(text, pos, line), line);
  const int k = bits_for(n);
  BitReader reader(text.substr(pos), line, pos);
  std::vector<std::pair<int, int>> pairs;
  std::uint64_t v = 0;
  while (reader.remaining() >= static_cast<std::size_t>(k + 1)) {
    const unsigned b = reader.bit();
    const std::uint64_t x = reader.bits(k);
    if (b) ++v;
    if (v >= static_cast<std::uint64_t>(n)) break;
    if (x > v) {
      v = x;
      if (v >= static_cast<std::uint64_t>(n)) break;
    } else {
      if (x == v) throw ParseError("sparse6 string encodes a loop", line, static_cast<long>(text.size()));
      pairs.emplace_back(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return MultiGraph::from_edge_list(n, pairs);
}

std::string to_sparse6(const MultiGraph& g) {
  const int n = g.vertex_count();
  const int k = bits_for(n);
  std::vector<std::pair<int, int>> sorted;  // (larger end, smaller end)
  for (const Edge& e : g.edges()) sorted.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(sorted.begin(), sorted.end());

  std::vector<bool> bits;
  int cur = 0;
  for (const auto& [w, u] : sorted) {
    if (w == cur) {
      bits.push_back(false);
      push_bits(bits, static_cast<std::uint64_t>(u), k);
    } else if (w == cur + 1) {
      bits.push_back(true);
      push_bits(bits, static_cast<std::uint64_t>(u), k);
    } else {
      bits.push_back(true);
      push_bits(bits, static_cast<std::uint64_t>(w), k);
      bits.push_back(false);
      push_bits(bits, static_cast<std::uint64_t>(u), k);
    }
    cur = w;
  }
  const std::size_t pad = (6 - bits.size() % 6) % 6;
  const bool special = (n == 2 && k == 1) || (n == 4 && k == 2) || (n == 8 && k == 3) || (n == 16 && k == 4);
  if (special && cur == n - 2 && pad >= static_cast<std::size_t>(k + 1)) {
    // otherwise the padding would decode as an edge to vertex n - 1
    bits.push_back(false);
    for (std::size_t i = 1; i < pad; ++i) bits.push_back(true);
  } else {
    for (std::size_t i = 0; i < pad; ++i) bits.push_back(true);
  }
  std::string out = ":";
  write_size(out, static_cast<std::uint64_t>(n));
  pack(out, bits);
  return out;
}

std::vector<MultiGraph> read_graphs(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::edge_list) return read_edge_lists(in);
  std::vector<MultiGraph> out;
  std::string text;
  long line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view v = strip(text);
    if (v.empty()) continue;
    if (v == ">>graph6<<" || v == ">>sparse6<<") continue;
    out.push_back(format == GraphFormat::graph6 ? parse_graph6(v, line_no) : parse_sparse6(v, line_no));
  }
  return out;
}

std::vector<MultiGraph> read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graphs(in, format);
}

void write_graph(std::ostream& out, const MultiGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list: write_edge_list(out, g); break;
    case GraphFormat::graph6: out << to_graph6(g) << '\n'; break;
    case GraphFormat::sparse6: out << to_sparse6(g) << '\n'; break;
  }
}

}  // namespace cubicpm

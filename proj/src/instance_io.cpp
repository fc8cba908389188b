#include "spfg/instance_io.hpp"

#include <algorithm>
#include <cerrno>
#include <climits>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfg/cover_enum.hpp"
#include "spfg/errors.hpp"
#include "spfg/kernelize.hpp"

namespace spfg {

// -------------------- parsing --------------------

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  std::vector<Token> tokens;
  int number;  // 1-based
};

// Strip comments, split on blanks, keep token columns for diagnostics.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{{}, number};
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(
          {std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

class LineReader {
public:
  explicit LineReader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) throw ParseError(last_line() + 1, 1, "unexpected end of input");
    return lines_[next_];
  }

  const Line& take(const char* keyword) {
    const Line& line = peek();
    if (line.tokens[0].text != keyword) {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected '" + std::string(keyword) + "', got '" +
                           line.tokens[0].text + "'");
    }
    ++next_;
    return line;
  }

  int last_line() const {
    return lines_.empty() ? 0 : lines_.back().number;
  }

private:
  std::vector<Line> lines_;
  size_t next_ = 0;
};

void expect_arity(const Line& line, size_t arity) {
  if (line.tokens.size() != arity + 1) {
    throw ParseError(line.number, line.tokens[0].column,
                     "'" + line.tokens[0].text + "' takes " +
                         std::to_string(arity) + " argument(s), got " +
                         std::to_string(line.tokens.size() - 1));
  }
}

int parse_int(const Line& line, size_t idx) {
  const Token& tok = line.tokens[idx];
  if (tok.text.empty() || tok.text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line.number, tok.column,
                     "expected a non-negative integer, got '" + tok.text + "'");
  }
  errno = 0;
  long long value = std::strtoll(tok.text.c_str(), nullptr, 10);
  if (errno != 0 || value > INT_MAX) {
    throw ParseError(line.number, tok.column, "integer out of range: " + tok.text);
  }
  return static_cast<int>(value);
}

int parse_id(const Line& line, size_t idx, int limit, const char* what) {
  int value = parse_int(line, idx);
  if (value >= limit) {
    throw ParseError(line.number, line.tokens[idx].column,
                     std::string(what) + " id " + std::to_string(value) +
                         " out of range [0, " + std::to_string(limit) + ")");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  LineReader reader(tokenize(text));

  {
    const Line& header = reader.take("spfg");
    expect_arity(header, 1);
    if (parse_int(header, 1) != 1) {
      throw ParseError(header.number, header.tokens[1].column,
                       "unsupported format version");
    }
  }

  const Line& gline = reader.take("graph");
  expect_arity(gline, 2);
  const int n = parse_int(gline, 1);
  const int m = parse_int(gline, 2);

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> edge_seen;
  for (int i = 0; i < m; ++i) {
    const Line& line = reader.take("e");
    expect_arity(line, 2);
    int u = parse_id(line, 1, n, "vertex");
    int v = parse_id(line, 2, n, "vertex");
    if (u == v) {
      throw ParseError(line.number, line.tokens[1].column, "self-loop");
    }
    if (u > v) std::swap(u, v);
    if (!edge_seen.insert({u, v}).second) {
      throw ParseError(line.number, line.tokens[1].column, "duplicate edge");
    }
    edges.push_back({u, v});
  }

  const Line& fline = reader.take("forcing");
  expect_arity(fline, 1);
  const int num_pairs = parse_int(fline, 1);
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> pair_seen;
  for (int i = 0; i < num_pairs; ++i) {
    const Line& line = reader.take("f");
    expect_arity(line, 2);
    int a = parse_id(line, 1, m, "edge");
    int b = parse_id(line, 2, m, "edge");
    if (a == b) {
      throw ParseError(line.number, line.tokens[1].column,
                       "forcing pair with identical endpoints");
    }
    if (a > b) std::swap(a, b);
    if (!pair_seen.insert({a, b}).second) {
      throw ParseError(line.number, line.tokens[1].column, "duplicate forcing pair");
    }
    pairs.push_back({a, b});
  }

  const Line& qline = reader.take("query");
  expect_arity(qline, 3);
  Instance inst;
  inst.graph = Graph(n, std::move(edges));
  inst.forcing = ForcingGraph(m, std::move(pairs));
  inst.s = parse_id(qline, 1, n, "terminal");
  inst.t = parse_id(qline, 2, n, "terminal");
  inst.k = parse_int(qline, 3);
  if (inst.s == inst.t) {
    throw ParseError(qline.number, qline.tokens[2].column, "terminals must differ");
  }

  if (!reader.done() && reader.peek().tokens[0].text == "modulator") {
    const Line& mline = reader.take("modulator");
    expect_arity(mline, 1);
    const int r = parse_int(mline, 1);
    std::vector<int> mod;
    std::set<int> mod_seen;
    for (int i = 0; i < r; ++i) {
      const Line& line = reader.take("x");
      expect_arity(line, 1);
      int id = parse_id(line, 1, m, "edge");
      if (!mod_seen.insert(id).second) {
        throw ParseError(line.number, line.tokens[1].column, "duplicate modulator id");
      }
      mod.push_back(id);
    }
    std::sort(mod.begin(), mod.end());
    const Line& bline = reader.take("budget");
    expect_arity(bline, 1);
    inst.modulator = std::move(mod);
    inst.ell = parse_int(bline, 1);
  }

  if (!reader.done()) {
    const Line& stray = reader.peek();
    throw ParseError(stray.number, stray.tokens[0].column,
                     "unexpected line '" + stray.tokens[0].text + "'");
  }
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  out += "spfg 1\n";
  out += "graph " + std::to_string(inst.graph.num_vertices()) + " " +
         std::to_string(inst.graph.num_edges()) + "\n";
  for (auto [u, v] : inst.graph.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  out += "forcing " + std::to_string(inst.forcing.num_pairs()) + "\n";
  for (auto [i, j] : inst.forcing.pairs()) {
    out += "f " + std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  out += "query " + std::to_string(inst.s) + " " + std::to_string(inst.t) + " " +
         std::to_string(inst.k) + "\n";
  if (inst.modulator) {
    out += "modulator " + std::to_string(inst.modulator->size()) + "\n";
    for (int id : *inst.modulator) {
      out += "x " + std::to_string(id) + "\n";
    }
    out += "budget " + std::to_string(*inst.ell) + "\n";
  }
  return out;
}

// -------------------- SplitMix64 --------------------

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  return next() % bound;
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

// -------------------- generators --------------------

namespace {

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

// Random recursive tree plus `extra` random chords: connected, simple.
Graph random_connected_base(int n, int extra, SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({u, v});
    present.insert({u, v});
  }
  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present.count({u, v})) missing.push_back({u, v});
    }
  }
  shuffle(missing, rng);
  const int take = std::min<int>(extra, static_cast<int>(missing.size()));
  edges.insert(edges.end(), missing.begin(), missing.begin() + take);
  return Graph(n, std::move(edges));
}

std::vector<int> shuffled_edge_ids(int m, SplitMix64& rng) {
  std::vector<int> ids(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) ids[static_cast<size_t>(i)] = i;
  shuffle(ids, rng);
  return ids;
}

// `count` distinct forcing pairs sampled without replacement, clamped to
// the number available.
std::vector<std::pair<int, int>> sample_pairs(int m, int count, SplitMix64& rng) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) all.push_back({i, j});
  }
  shuffle(all, rng);
  const int take = std::min<int>(count, static_cast<int>(all.size()));
  all.resize(static_cast<size_t>(take));
  return all;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void built_predicate(bool ok, const char* kind) {
  if (!ok) {
    throw std::logic_error(std::string("generator broke its structural promise: ") + kind);
  }
}

}  // namespace

GenKind parse_gen_kind(const std::string& name) {
  if (name == "ladder") return GenKind::Ladder;
  if (name == "cluster") return GenKind::Cluster;
  if (name == "bounded-degree") return GenKind::BoundedDegree;
  if (name == "grid-planar") return GenKind::GridPlanar;
  if (name == "random") return GenKind::Random;
  if (name == "2k2free-star") return GenKind::TwoK2FreeStar;
  throw std::invalid_argument("unknown generator kind: " + name);
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Ladder: return "ladder";
    case GenKind::Cluster: return "cluster";
    case GenKind::BoundedDegree: return "bounded-degree";
    case GenKind::GridPlanar: return "grid-planar";
    case GenKind::Random: return "random";
    case GenKind::TwoK2FreeStar: return "2k2free-star";
  }
  return "?";
}

Instance generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
  SplitMix64 rng(seed);
  require(params.k >= 0, "k must be >= 0");
  Instance inst;
  inst.k = params.k;

  switch (kind) {
    case GenKind::Ladder: {
      require(params.n >= 2, "n must be >= 2");
      require(params.pairs >= 0, "pairs must be >= 0");
      inst.graph = random_connected_base(params.n, params.extra_edges, rng);
      const int m = inst.graph.num_edges();
      require(m >= 2 * params.pairs, "ladder needs at least 2*pairs edges");
      auto ids = shuffled_edge_ids(m, rng);
      std::vector<std::pair<int, int>> pairs;
      for (int p = 0; p < params.pairs; ++p) {
        pairs.push_back({ids[static_cast<size_t>(2 * p)],
                         ids[static_cast<size_t>(2 * p + 1)]});
      }
      inst.forcing = ForcingGraph(m, std::move(pairs));
      built_predicate(classify_special(inst.forcing).max_degree <= 1, "ladder");
      break;
    }
    case GenKind::Cluster: {
      require(params.n >= 2, "n must be >= 2");
      require(params.cliques >= 1 && params.clique_size >= 2,
              "cluster needs cliques >= 1 and clique_size >= 2");
      inst.graph = random_connected_base(params.n, params.extra_edges, rng);
      const int m = inst.graph.num_edges();
      require(m >= params.cliques * params.clique_size,
              "cluster needs at least cliques*clique_size edges");
      auto ids = shuffled_edge_ids(m, rng);
      std::vector<std::pair<int, int>> pairs;
      for (int c = 0; c < params.cliques; ++c) {
        const int base = c * params.clique_size;
        for (int i = 0; i < params.clique_size; ++i) {
          for (int j = i + 1; j < params.clique_size; ++j) {
            pairs.push_back({ids[static_cast<size_t>(base + i)],
                             ids[static_cast<size_t>(base + j)]});
          }
        }
      }
      inst.forcing = ForcingGraph(m, std::move(pairs));
      built_predicate(classify_special(inst.forcing).cluster, "cluster");
      break;
    }
    case GenKind::BoundedDegree: {
      require(params.n >= 2, "n must be >= 2");
      require(params.eta >= 1, "eta must be >= 1");
      require(params.pairs >= 0, "pairs must be >= 0");
      inst.graph = random_connected_base(params.n, params.extra_edges, rng);
      const int m = inst.graph.num_edges();
      auto candidates = sample_pairs(m, m * (m - 1) / 2, rng);  // shuffled full list
      std::vector<int> deg(static_cast<size_t>(m), 0);
      std::vector<std::pair<int, int>> pairs;
      for (auto [a, b] : candidates) {
        if (static_cast<int>(pairs.size()) == params.pairs) break;
        if (deg[static_cast<size_t>(a)] < params.eta &&
            deg[static_cast<size_t>(b)] < params.eta) {
          pairs.push_back({a, b});
          ++deg[static_cast<size_t>(a)];
          ++deg[static_cast<size_t>(b)];
        }
      }
      inst.forcing = ForcingGraph(m, std::move(pairs));
      built_predicate(classify_special(inst.forcing).max_degree <= params.eta,
                      "bounded-degree");
      break;
    }
    case GenKind::GridPlanar: {
      require(params.rows >= 2 && params.cols >= 2, "grid needs rows, cols >= 2");
      require(params.pairs >= 0, "pairs must be >= 0");
      const int rows = params.rows, cols = params.cols;
      std::vector<std::pair<int, int>> edges;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const int v = r * cols + c;
          if (c + 1 < cols) edges.push_back({v, v + 1});
          if (r + 1 < rows) edges.push_back({v, v + cols});
          if (params.diagonals && c + 1 < cols && r + 1 < rows) {
            edges.push_back({v, v + cols + 1});
          }
        }
      }
      inst.graph = Graph(rows * cols, std::move(edges));
      inst.forcing =
          ForcingGraph(inst.graph.num_edges(),
                       sample_pairs(inst.graph.num_edges(), params.pairs, rng));
      built_predicate(planar_edge_bound_check(inst.graph), "grid-planar");
      break;
    }
    case GenKind::Random: {
      require(params.n >= 2, "n must be >= 2");
      require(params.edge_prob >= 0.0 && params.edge_prob <= 1.0,
              "edge_prob must be in [0, 1]");
      require(params.pairs >= 0, "pairs must be >= 0");
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < params.n; ++u) {
        for (int v = u + 1; v < params.n; ++v) {
          if (rng.next_double() < params.edge_prob) edges.push_back({u, v});
        }
      }
      inst.graph = Graph(params.n, std::move(edges));
      inst.forcing =
          ForcingGraph(inst.graph.num_edges(),
                       sample_pairs(inst.graph.num_edges(), params.pairs, rng));
      break;
    }
    case GenKind::TwoK2FreeStar: {
      require(params.n >= 2, "n must be >= 2");
      require(params.leaves >= 1, "star needs leaves >= 1");
      inst.graph = random_connected_base(params.n, params.extra_edges, rng);
      const int m = inst.graph.num_edges();
      require(m >= params.leaves + 1, "star needs at least leaves+1 edges");
      auto ids = shuffled_edge_ids(m, rng);
      std::vector<std::pair<int, int>> pairs;
      for (int l = 1; l <= params.leaves; ++l) {
        pairs.push_back({ids[0], ids[static_cast<size_t>(l)]});
      }
      inst.forcing = ForcingGraph(m, std::move(pairs));
      built_predicate(is_2k2_free(inst.forcing), "2k2free-star");
      break;
    }
  }

  inst.s = 0;
  inst.t = inst.graph.num_vertices() - 1;
  validate_instance(inst);
  return inst;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace spfg

#include "maxcut/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace maxcut {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, int line,
                       const std::string& msg) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + msg);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  return out;
}

// Splits a line into int64 tokens; any non-integer token is an error.
std::vector<std::int64_t> int_tokens(const std::string& line,
                                     const std::filesystem::path& path,
                                     int lineno) {
  std::vector<std::int64_t> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(path, lineno, "expected integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    auto t = int_tokens(line, path, lineno);
    if (n < 0) {
      if (t.size() != 2) fail(path, lineno, "header must be 'n m'");
      n = t[0];
      m = t[1];
      if (n < 0 || m < 0) fail(path, lineno, "negative header values");
      continue;
    }
    if (t.size() != 3) fail(path, lineno, "edge record must be 'i j w'");
    if (t[0] < 1 || t[0] > n || t[1] < 1 || t[1] > n)
      fail(path, lineno, "vertex index out of range [1," + std::to_string(n) +
                             "]");
    if (t[0] == t[1]) fail(path, lineno, "self-loop");
    edges.push_back({static_cast<int>(t[0] - 1), static_cast<int>(t[1] - 1),
                     t[2]});
  }
  if (n < 0) throw ParseError(path.string() + ": missing header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(path.string() + ": header declares " + std::to_string(m) +
                     " edges but file has " + std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << g.n() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges())
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  if (!out) throw ParseError("write failed: " + path.string());
}

void write_laplacian(const Graph& g, LaplacianScale scale,
                     const std::filesystem::path& path) {
  LaplacianMatrix L = laplacian(g);
  std::ofstream out = open_out(path);
  for (int i = 0; i < L.n(); ++i) {
    for (int j = 0; j < L.n(); ++j) {
      std::int64_t v = L(i, j);
      if (scale == LaplacianScale::quarter) {
        if (v % 4 != 0)
          throw InvalidArgument("Laplacian entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") = " + std::to_string(v) +
                                " is not divisible by 4");
        v /= 4;
      }
      out << v << (j + 1 == L.n() ? '\n' : ' ');
    }
  }
  if (!out) throw ParseError("write failed: " + path.string());
}

LaplacianMatrix read_laplacian(const std::filesystem::path& path,
                               LaplacianScale scale) {
  std::ifstream in = open_in(path);
  std::string line;
  int lineno = 0;
  std::vector<std::vector<std::int64_t>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    rows.push_back(int_tokens(line, path, lineno));
  }
  const int n = static_cast<int>(rows.size());
  LaplacianMatrix L(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError(path.string() + ": row " + std::to_string(i + 1) +
                       " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      L.at(i, j) =
          scale == LaplacianScale::quarter ? 4 * rows[i][j] : rows[i][j];
  }
  try {
    L.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return L;
}

void write_coupling_dict(const Graph& g, DictConvention convention,
                         const std::filesystem::path& path) {
  LaplacianMatrix L = laplacian(g);
  std::ofstream out = open_out(path);
  for (int i = 0; i < L.n(); ++i) {
    const int j_hi = convention == DictConvention::be_bqp ? i : i - 1;
    for (int j = 0; j <= j_hi; ++j) {
      std::int64_t v = -L(i, j);
      if (convention == DictConvention::be_bqp) {
        if (v % 4 != 0)
          throw InvalidArgument(
              "be-bqp dictionary requires L divisible by 4; entry (" +
              std::to_string(i) + "," + std::to_string(j) + ") is " +
              std::to_string(-v));
        v /= 4;
      }
      if (v != 0 || i == j)
        out << '(' << i << ", " << j << "): " << v << '\n';
    }
  }
  if (!out) throw ParseError("write failed: " + path.string());
}

namespace {

// One "(i, j): w" entry; `pos` advances past it. Returns false at end of
// the available text.
bool parse_dict_entry(const std::string& text, std::size_t& pos,
                      const std::filesystem::path& path, int lineno,
                      std::pair<int, int>& key, std::int64_t& value) {
  while (pos < text.size() &&
         (std::isspace(static_cast<unsigned char>(text[pos])) ||
          text[pos] == ','))
    ++pos;
  if (pos >= text.size()) return false;
  if (text[pos] != '(') fail(path, lineno, "expected '(' in dictionary entry");
  std::size_t close = text.find(')', pos);
  std::size_t colon = text.find(':', pos);
  if (close == std::string::npos || colon == std::string::npos ||
      colon < close)
    fail(path, lineno, "malformed dictionary entry");
  std::istringstream key_ss(text.substr(pos + 1, close - pos - 1));
  long i, j;
  char comma;
  if (!(key_ss >> i >> comma >> j) || comma != ',')
    fail(path, lineno, "malformed dictionary key");
  std::size_t vstart = colon + 1;
  while (vstart < text.size() &&
         std::isspace(static_cast<unsigned char>(text[vstart])))
    ++vstart;
  std::size_t vend = vstart;
  while (vend < text.size() && text[vend] != ',' && text[vend] != '}' &&
         !std::isspace(static_cast<unsigned char>(text[vend])))
    ++vend;
  std::int64_t v = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + vstart, text.data() + vend, v);
  if (ec != std::errc() || ptr != text.data() + vend || vend == vstart)
    fail(path, lineno, "malformed dictionary value");
  key = {static_cast<int>(i), static_cast<int>(j)};
  value = v;
  pos = vend;
  return true;
}

}  // namespace

CouplingDict read_coupling_dict(const std::filesystem::path& path,
                                DictConvention convention) {
  std::ifstream in = open_in(path);
  CouplingDict dict;
  dict.convention = convention;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    // Tolerate the single-line brace-wrapped variant.
    std::string body = line;
    if (auto b = body.find('{'); b != std::string::npos) body.erase(b, 1);
    if (auto b = body.find('}'); b != std::string::npos) body.erase(b);
    std::size_t pos = 0;
    std::pair<int, int> key;
    std::int64_t value;
    while (parse_dict_entry(body, pos, path, lineno, key, value)) {
      if (key.first < key.second)
        fail(path, lineno, "upper-triangular key (" +
                               std::to_string(key.first) + "," +
                               std::to_string(key.second) + ")");
      if (convention == DictConvention::gset && key.first == key.second)
        fail(path, lineno, "diagonal key not allowed under gset convention");
      if (!dict.entries.emplace(key, value).second)
        fail(path, lineno, "duplicate key (" + std::to_string(key.first) +
                               "," + std::to_string(key.second) + ")");
    }
  }
  return dict;
}

Graph coupling_dict_to_graph(const CouplingDict& dict, int n) {
  // gset values are -L strictly lower = +a_ij; be_bqp values are -1/4 L,
  // so off-diagonals are a_ij / 4.
  std::vector<Edge> edges;
  std::vector<std::int64_t> diag(n, 0);
  for (const auto& [key, v] : dict.entries) {
    auto [i, j] = key;
    if (i >= n || j < 0)
      throw InvalidArgument("dictionary key out of range for n=" +
                            std::to_string(n));
    if (i == j) {
      diag[i] = v;
      continue;
    }
    const std::int64_t w =
        dict.convention == DictConvention::be_bqp ? 4 * v : v;
    if (w != 0) edges.push_back({j, i, w});
  }
  Graph g(n, std::move(edges));
  if (dict.convention == DictConvention::be_bqp) {
    for (int i = 0; i < n; ++i) {
      if (4 * diag[i] != -g.weighted_degree(i))
        throw InvalidArgument("dictionary diagonal at " + std::to_string(i) +
                              " inconsistent with off-diagonal weights");
    }
  }
  return g;
}

CutAssignment read_cut_vector(const std::filesystem::path& path, int n) {
  std::ifstream in = open_in(path);
  CutAssignment x;
  std::string line;
  int lineno = 0;
  for (; std::getline(in, line);) {
    ++lineno;
    if (blank(line)) continue;
    for (std::int64_t v : int_tokens(line, path, lineno)) {
      if (v == 1)
        x.push_back(+1);
      else if (v == -1)
        x.push_back(-1);
      else if (v == 0)
        x.push_back(-1);  // 0/1 files: 0 maps to -1
      else
        fail(path, lineno, "spin must be -1, 0 or 1");
    }
  }
  if (static_cast<int>(x.size()) != n)
    throw ParseError(path.string() + ": expected " + std::to_string(n) +
                     " spins, got " + std::to_string(x.size()));
  return x;
}

void write_cut_vector(const CutAssignment& x,
                      const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  for (std::int8_t s : x) out << static_cast<int>(s) << '\n';
  if (!out) throw ParseError("write failed: " + path.string());
}

std::int64_t read_opt_value(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  int lineno = 0;
  std::vector<std::int64_t> vals;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    for (std::int64_t v : int_tokens(line, path, lineno)) vals.push_back(v);
  }
  if (vals.size() != 1)
    throw ParseError(path.string() + ": expected exactly one integer value");
  return vals[0];
}

void write_opt_value(std::int64_t value, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << value << '\n';
  if (!out) throw ParseError("write failed: " + path.string());
}

QuboInstance read_qubo_sparse(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  long seen = 0;
  QuboInstance q;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    auto t = int_tokens(line, path, lineno);
    if (n < 0) {
      if (t.size() != 2) fail(path, lineno, "header must be 'n m'");
      n = t[0];
      m = t[1];
      if (n < 0 || m < 0) fail(path, lineno, "negative header values");
      q = QuboInstance(static_cast<int>(n));
      continue;
    }
    if (t.size() != 3) fail(path, lineno, "entry must be 'i j q'");
    if (t[0] < 1 || t[0] > n || t[1] < 1 || t[1] > n)
      fail(path, lineno, "index out of range [1," + std::to_string(n) + "]");
    if (t[0] > t[1]) fail(path, lineno, "entries must have i <= j");
    if (q(static_cast<int>(t[0] - 1), static_cast<int>(t[1] - 1)) != 0)
      fail(path, lineno, "duplicate entry");
    q.set(static_cast<int>(t[0] - 1), static_cast<int>(t[1] - 1), t[2]);
    ++seen;
  }
  if (n < 0) throw ParseError(path.string() + ": missing header");
  if (seen != m)
    throw ParseError(path.string() + ": header declares " + std::to_string(m) +
                     " entries but file has " + std::to_string(seen));
  return q;
}

void write_qubo_sparse(const QuboInstance& q,
                       const std::filesystem::path& path) {
  std::vector<std::string> lines;
  for (int i = 0; i < q.n(); ++i)
    for (int j = i; j < q.n(); ++j)
      if (q(i, j) != 0)
        lines.push_back(std::to_string(i + 1) + ' ' + std::to_string(j + 1) +
                        ' ' + std::to_string(q(i, j)));
  std::ofstream out = open_out(path);
  out << q.n() << ' ' << lines.size() << '\n';
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw ParseError("write failed: " + path.string());
}

}  // namespace maxcut

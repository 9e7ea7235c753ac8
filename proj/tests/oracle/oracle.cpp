#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oracle {

Matrix Matrix::of(const topo::Graph& g) {
  Matrix m;
  m.n = g.order();
  m.adj.assign(static_cast<std::size_t>(m.n), std::vector<bool>(static_cast<std::size_t>(m.n), false));
  for (int u = 0; u < m.n; ++u) {
    for (int v = 0; v < m.n; ++v) m.adj[u][v] = g.adjacent(u, v);
  }
  return m;
}

std::uint64_t Matrix::edges() const {
  std::uint64_t e = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e += adj[u][v];
  }
  return e;
}

int Matrix::degree(int v) const { return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), true)); }

std::vector<std::vector<int>> floyd(const Matrix& m) {
  std::vector<std::vector<int>> d(static_cast<std::size_t>(m.n), std::vector<int>(static_cast<std::size_t>(m.n), kInf));
  for (int u = 0; u < m.n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < m.n; ++v) {
      if (m.adj[u][v]) d[u][v] = 1;
    }
  }
  for (int k = 0; k < m.n; ++k) {
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

bool connected(const Matrix& m) {
  const auto d = floyd(m);
  for (int v = 0; v < m.n; ++v) {
    if (d[0][v] >= kInf) return false;
  }
  return true;
}

std::map<int, std::uint64_t> profile(const Matrix& m) {
  const auto d = floyd(m);
  std::map<int, std::uint64_t> p;
  for (int u = 0; u < m.n; ++u) {
    for (int v = u + 1; v < m.n; ++v) ++p[d[u][v]];
  }
  return p;
}

mpz_class wiener(const Matrix& m) {
  mpz_class w = 0;
  for (auto [d, k] : profile(m)) w += mpz_class(d) * mpz_class(static_cast<unsigned long>(k));
  return w;
}

mpq_class harary(const Matrix& m) {
  mpq_class h = 0;
  for (auto [d, k] : profile(m)) h += mpq_class(static_cast<unsigned long>(k), static_cast<unsigned long>(d));
  h.canonicalize();
  return h;
}

mpz_class m1(const Matrix& m) {
  mpz_class s = 0;
  for (int v = 0; v < m.n; ++v) s += m.degree(v) * m.degree(v);
  return s;
}

mpz_class m2(const Matrix& m) {
  mpz_class s = 0;
  for (int u = 0; u < m.n; ++u) {
    for (int v = u + 1; v < m.n; ++v) {
      if (m.adj[u][v]) s += m.degree(u) * m.degree(v);
    }
  }
  return s;
}

mpz_class pi1(const Matrix& m) {
  mpz_class p = 1;
  for (int v = 0; v < m.n; ++v) p *= m.degree(v);
  return p;
}

mpz_class pi2(const Matrix& m) {
  mpz_class p = 1;
  for (int v = 0; v < m.n; ++v) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m.degree(v)), static_cast<unsigned long>(m.degree(v)));
    p *= power;
  }
  return p;
}

namespace {

int components(const Matrix& m, int skip_vertex) {
  std::vector<bool> seen(static_cast<std::size_t>(m.n), false);
  int count = 0;
  for (int s = 0; s < m.n; ++s) {
    if (s == skip_vertex || seen[s]) continue;
    ++count;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < m.n; ++v) {
        if (v != skip_vertex && m.adj[u][v] && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return count;
}

}  // namespace

bool has_bridge(const Matrix& m) {
  const int base = components(m, -1);
  Matrix copy = m;
  for (int u = 0; u < m.n; ++u) {
    for (int v = u + 1; v < m.n; ++v) {
      if (!m.adj[u][v]) continue;
      copy.adj[u][v] = copy.adj[v][u] = false;
      const bool bridge = components(copy, -1) > base;
      copy.adj[u][v] = copy.adj[v][u] = true;
      if (bridge) return true;
    }
  }
  return false;
}

bool has_cut_vertex(const Matrix& m) {
  const int base = components(m, -1);
  for (int v = 0; v < m.n; ++v) {
    if (components(m, v) > base) return true;
  }
  return false;
}

bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.n != b.n || a.edges() != b.edges()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < a.n && same; ++u) {
      for (int v = u + 1; v < a.n; ++v) {
        if (a.adj[u][v] != b.adj[perm[u]][perm[v]]) {
          same = false;
          break;
        }
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string graph6(const Matrix& m) {
  std::string out(1, static_cast<char>(m.n + 63));
  std::vector<int> bits;
  for (int j = 1; j < m.n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(m.adj[i][j] ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

Matrix from_code(int n, std::uint64_t code) {
  Matrix m;
  m.n = n;
  m.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((code >> k) & 1U) m.adj[i][j] = m.adj[j][i] = true;
    }
  }
  return m;
}

std::vector<std::vector<int>> cycle_lists(int n) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[v].push_back((v + 1) % n);
    adj[v].push_back((v + n - 1) % n);
  }
  return adj;
}

std::map<int, std::uint64_t> profile_bfs(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::map<int, std::uint64_t> p;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = s + 1; v < n; ++v) ++p[dist[v]];
  }
  return p;
}

DegreeSums degree_sums(const std::vector<std::vector<int>>& adj) {
  DegreeSums out{0, 0, 1, 1};
  for (std::size_t u = 0; u < adj.size(); ++u) {
    const long du = static_cast<long>(adj[u].size());
    out.m1 += du * du;
    out.pi1 *= du;
    for (int v : adj[u]) {
      const long dv = static_cast<long>(adj[static_cast<std::size_t>(v)].size());
      if (static_cast<std::size_t>(v) > u) {
        out.m2 += du * dv;
        out.pi2 *= du * dv;
      }
    }
  }
  return out;
}

}  // namespace oracle

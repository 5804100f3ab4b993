#pragma once

// Test-only graph generators and brute-force oracles. Nothing here calls the
// library's enumeration, sampling or canonicalization paths, so the checks
// built on top of it are independent of the code under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "mfs/canon.hpp"
#include "mfs/graph.hpp"

namespace mfs::testing {

using Edge = std::pair<VertexId, VertexId>;

inline Graph make_graph(std::size_t n, std::vector<Edge> edges, bool directed = false) {
  return Graph::from_edges(n, directed, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return make_graph(n, e);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

// G(n, m): m distinct undirected edges drawn uniformly (or arcs when directed).
inline Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed, bool directed = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::set<Edge> chosen;
  while (chosen.size() < m) {
    VertexId u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!directed && v < u) std::swap(u, v);
    chosen.emplace(u, v);
  }
  return make_graph(n, {chosen.begin(), chosen.end()}, directed);
}

// Each pair (or ordered pair) present with probability p.
inline Graph random_small_graph(std::size_t n, double p, std::mt19937_64& rng, bool directed = false) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || (!directed && v < u)) continue;
      if (coin(rng)) e.emplace_back(u, v);
    }
  return make_graph(n, e, directed);
}

// Dense adjacency matrices built from the arc list.
struct Dense {
  std::size_t n;
  std::vector<std::vector<bool>> arc;  // arc[u][v]
  std::vector<std::vector<bool>> und;  // undirected view

  explicit Dense(const Graph& g)
      : n(g.vertex_count()), arc(n, std::vector<bool>(n)), und(n, std::vector<bool>(n)) {
    for (auto [u, v] : g.arcs()) {
      arc[u][v] = true;
      if (!g.directed()) arc[v][u] = true;
      und[u][v] = und[v][u] = true;
    }
  }
};

// Frame instances by scanning all vertex tuples of the dense matrix.
struct BruteFrames {
  std::uint64_t fork = 0, trident = 0, chain = 0, chain_closed = 0;
};

inline BruteFrames brute_frames(const Graph& g) {
  Dense d(g);
  BruteFrames out;
  const std::size_t n = d.n;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (a == c || b == c || !d.und[c][a] || !d.und[c][b]) continue;
        ++out.fork;
        for (std::size_t e = b + 1; e < n; ++e)
          if (e != c && d.und[c][e]) ++out.trident;
      }
  // chain outcomes (a, i, j, b) with i < j; a == b is a closed chain
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!d.und[i][j]) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i || a == j || !d.und[a][i]) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (b == i || b == j || !d.und[j][b]) continue;
          ++out.chain;
          if (a == b) ++out.chain_closed;
        }
      }
    }
  return out;
}

// Canonical code by direct minimization, with its own bit layout bookkeeping.
inline std::uint32_t brute_canonical(const Dense& d, const std::vector<std::size_t>& vs, bool directed) {
  const int k = static_cast<int>(vs.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    // vertex slot s holds vs[perm[s]]
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j || (!directed && j < i)) continue;
        if (d.arc[vs[perm[i]]][vs[perm[j]]]) code |= 1u << bit;
        ++bit;
      }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_connected(const Dense& d, const std::vector<std::size_t>& vs) {
  std::vector<bool> seen(vs.size());
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (!seen[v] && d.und[vs[u]][vs[v]]) seen[v] = true, stack.push_back(v);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Connected induced subgraphs of size k over all C(n, k) subsets, keyed by
// canonical code.
inline std::map<std::uint32_t, std::uint64_t> brute_census(const Graph& g, int k) {
  Dense d(g);
  std::map<std::uint32_t, std::uint64_t> counts;
  const std::size_t n = d.n;
  std::vector<std::size_t> vs(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == k) {
      if (brute_connected(d, vs)) ++counts[brute_canonical(d, vs, g.directed())];
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      vs[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return counts;
}

// Upper critical value of the chi-square distribution.
inline double chi_square_critical(std::size_t dof, double alpha) {
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

// Chi-square statistic of observed counts against a uniform expectation.
template <typename Key>
double chi_square_uniform(const std::map<Key, std::uint64_t>& observed, std::size_t categories,
                          std::uint64_t draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(categories);
  double stat = 0;
  std::size_t seen = 0;
  for (const auto& [key, count] : observed) {
    const double diff = static_cast<double>(count) - expected;
    stat += diff * diff / expected;
    ++seen;
  }
  stat += static_cast<double>(categories - seen) * expected;  // never-drawn categories
  return stat;
}

}  // namespace mfs::testing

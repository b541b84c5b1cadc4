#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lfd/quiver.hpp"
#include "lfd/rep_space.hpp"
#include "lfd/roots.hpp"

#ifndef LFD_TEST_DATA_DIR
#define LFD_TEST_DATA_DIR "tests/data"
#endif

namespace lfdtest {

using lfd::DimVector;
using lfd::Quiver;

inline std::string data_path(const std::string& name) { return std::string(LFD_TEST_DATA_DIR) + "/" + name; }

inline lfd::QuiverInput load(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream buf;
  buf << in.rdbuf();
  return lfd::parse_quiver_text(buf.str());
}

inline Quiver a2() { return Quiver::numbered(2, {{0, 1}}); }
inline Quiver a3_path() { return Quiver::numbered(3, {{0, 1}, {1, 2}}); }
/// Arrows 1->4, 2->4, 3->4.
inline Quiver d4_star() { return Quiver::numbered(4, {{0, 3}, {1, 3}, {2, 3}}); }
inline Quiver kronecker() { return Quiver::numbered(2, {{0, 1}, {0, 1}}); }
inline Quiver cycle3() { return Quiver::numbered(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Every orientation of an undirected edge list.
inline std::vector<Quiver> orientations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Quiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e)
      arrows.push_back((mask >> e) & 1 ? std::make_pair(edges[e].second, edges[e].first) : edges[e]);
    out.push_back(Quiver::numbered(n, arrows));
  }
  return out;
}

struct NamedGraph {
  std::string name;
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Connected Dynkin graphs with at most five vertices.
inline std::vector<NamedGraph> dynkin_graphs_up_to_5() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    NamedGraph g{"A" + std::to_string(n), n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
    out.push_back(g);
  }
  out.push_back({"D4", 4, {{0, 3}, {1, 3}, {2, 3}}});
  out.push_back({"D5", 5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}}});
  return out;
}

/// Calls fn on every vector with 0 <= d_i <= bound.
inline void for_each_vector(std::size_t n, long long bound, const std::function<void(const DimVector&)>& fn) {
  DimVector d = DimVector::zero(n);
  while (true) {
    fn(d);
    std::size_t i = 0;
    while (i < n && d[i] == bound) d[i++] = 0;
    if (i == n) return;
    ++d[i];
  }
}

/// Positive real roots of a Dynkin quiver with entries <= bound, by brute
/// force on q_Q(d) = 1 (for Dynkin graphs the positive roots are exactly the
/// positive solutions).
inline std::vector<DimVector> dynkin_positive_roots(const Quiver& q, long long bound) {
  std::vector<DimVector> out;
  for_each_vector(q.vertex_count(), bound, [&](const DimVector& d) {
    if (!d.is_zero() && lfd::tits_form(q, d) == 1) out.push_back(d);
  });
  return out;
}

/// Random tree on n vertices (random parent for each vertex, random
/// orientation per edge).
inline Quiver random_tree(std::size_t n, lfd::Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    if (rng() & 1)
      arrows.push_back({parent, v});
    else
      arrows.push_back({v, parent});
  }
  return Quiver::numbered(n, arrows);
}

/// Cyclic quiver 0 -> 1 -> ... -> p-1 -> 0. Its nilpotent representations form
/// a standard tube of rank p in which tau S_i = S_{i+1}.
inline Quiver cyclic_quiver(std::size_t p) {
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t i = 0; i < p; ++i) arrows.push_back({i, (i + 1) % p});
  return Quiver::numbered(p, arrows);
}

/// Uniserial nilpotent representation of cyclic_quiver(p) with composition
/// factors at vertices top, top+1, ..., top+length-1 (top first).
inline lfd::Representation<lfd::PrimeField> uniserial(const lfd::PrimeField& k, std::size_t p, long top,
                                                      std::size_t length) {
  const auto q = cyclic_quiver(p);
  auto at = [p](long v) { return static_cast<std::size_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); };
  DimVector d = DimVector::zero(p);
  std::vector<std::pair<std::size_t, std::size_t>> basis;  // (vertex, local index)
  for (std::size_t j = 0; j < length; ++j) {
    const auto v = at(top + static_cast<long>(j));
    basis.push_back({v, static_cast<std::size_t>(d[v])});
    ++d[v];
  }
  auto m = lfd::zero_representation(k, q, d);
  for (std::size_t j = 0; j + 1 < length; ++j) {
    const auto [v, local] = basis[j];
    const auto [w, local_next] = basis[j + 1];
    m.maps[v](local_next, local) = k.one();  // arrow v -> v+1 has index v
    (void)w;
  }
  m.validate();
  return m;
}

}  // namespace lfdtest

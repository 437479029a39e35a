#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "coxrep/errors.hpp"
#include "coxrep/integer.hpp"

namespace coxrep {

/// Vertices are numbered 1..n throughout.
using Vertex = std::size_t;

struct Arrow {
  Vertex source = 0;
  Vertex target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Unoriented multigraph |Q|. Edge k is the underlying edge of arrow k, so
/// edge order is arrow order.
struct UnderlyingGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // stored with first < second

  friend bool operator==(const UnderlyingGraph&, const UnderlyingGraph&) = default;
};

enum class VertexKind { Sink, Source, Neither, Isolated };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Sink: return "Sink";
    case VertexKind::Source: return "Source";
    case VertexKind::Neither: return "Neither";
    case VertexKind::Isolated: return "Isolated";
  }
  return "?";
}

/// Finite acyclic quiver without loops. Parallel arrows are distinct records;
/// the arrow id is its index in arrows().
class Quiver {
 public:
  Quiver() = default;

  Quiver(std::size_t n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
    for (const auto& a : arrows_) {
      if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_) {
        throw RangeError("arrow endpoint out of range 1.." + std::to_string(n_));
      }
      if (a.source == a.target) throw CycleError("loops are not allowed");
    }
    if (!acyclic()) throw CycleError("quiver has an oriented cycle");
  }

  /// Convenience: arrows as (source, target) pairs.
  static Quiver from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Arrow> arrows;
    arrows.reserve(pairs.size());
    for (auto [s, t] : pairs) arrows.push_back({s, t});
    return Quiver(n, std::move(arrows));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }
  const Arrow& arrow(std::size_t id) const { return arrows_.at(id); }

  void check_vertex(Vertex i) const {
    if (i < 1 || i > n_) {
      throw RangeError("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
    }
  }

  /// Ids of arrows with the given target, in id order.
  std::vector<std::size_t> arrows_into(Vertex i) const {
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].target == i) ids.push_back(k);
    return ids;
  }

  std::vector<std::size_t> arrows_out_of(Vertex i) const {
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].source == i) ids.push_back(k);
    return ids;
  }

  UnderlyingGraph underlying_graph() const {
    UnderlyingGraph g{n_, {}};
    g.edges.reserve(arrows_.size());
    for (const auto& a : arrows_) {
      g.edges.emplace_back(std::min(a.source, a.target), std::max(a.source, a.target));
    }
    return g;
  }

  /// The quiver with vertex i removed, plus the map from new vertex numbers
  /// to old ones (entry k-1 is the old number of new vertex k).
  std::pair<Quiver, std::vector<Vertex>> delete_vertex(Vertex i) const {
    check_vertex(i);
    std::vector<Vertex> new_to_old;
    std::vector<Vertex> old_to_new(n_ + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      if (v == i) continue;
      new_to_old.push_back(v);
      old_to_new[v] = new_to_old.size();
    }
    std::vector<Arrow> arrows;
    for (const auto& a : arrows_) {
      if (a.source == i || a.target == i) continue;
      arrows.push_back({old_to_new[a.source], old_to_new[a.target]});
    }
    return {Quiver(n_ - 1, std::move(arrows)), std::move(new_to_old)};
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  bool acyclic() const {
    std::vector<std::size_t> indegree(n_ + 1, 0);
    for (const auto& a : arrows_) ++indegree[a.target];
    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= n_; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      Vertex v = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& a : arrows_) {
        if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
      }
    }
    return seen == n_;
  }

  std::size_t n_ = 0;
  std::vector<Arrow> arrows_;
};

inline void check_length(const Quiver& q, const IntVector& v) {
  if (v.size() != q.num_vertices()) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " paired with a quiver on " + std::to_string(q.num_vertices()) +
                         " vertices");
  }
}

/// <beta, gamma> = sum_i beta_i gamma_i - sum over arrows a:i->j of beta_i gamma_j.
inline Integer euler_form(const Quiver& q, const IntVector& beta, const IntVector& gamma) {
  check_length(q, beta);
  check_length(q, gamma);
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) total += beta[i] * gamma[i];
  for (const auto& a : q.arrows()) total -= beta[a.source - 1] * gamma[a.target - 1];
  return total;
}

inline Integer sym_form(const Quiver& q, const IntVector& beta, const IntVector& gamma) {
  return euler_form(q, beta, gamma) + euler_form(q, gamma, beta);
}

/// (e_i, v) without materializing e_i.
inline Integer sym_form_with_simple(const Quiver& q, Vertex i, const IntVector& v) {
  q.check_vertex(i);
  check_length(q, v);
  Integer total = 2 * v[i - 1];
  for (const auto& a : q.arrows()) {
    if (a.source == i) total -= v[a.target - 1];
    if (a.target == i) total -= v[a.source - 1];
  }
  return total;
}

inline VertexKind vertex_kind(const Quiver& q, Vertex i) {
  q.check_vertex(i);
  bool in = false, out = false;
  for (const auto& a : q.arrows()) {
    if (a.target == i) in = true;
    if (a.source == i) out = true;
  }
  if (!in && !out) return VertexKind::Isolated;
  if (in && !out) return VertexKind::Sink;
  if (out && !in) return VertexKind::Source;
  return VertexKind::Neither;
}

/// Sinks in the loose sense used by reflection: no arrow leaves i.
inline bool is_sink_or_isolated(const Quiver& q, Vertex i) {
  auto k = vertex_kind(q, i);
  return k == VertexKind::Sink || k == VertexKind::Isolated;
}

inline bool is_source_or_isolated(const Quiver& q, Vertex i) {
  auto k = vertex_kind(q, i);
  return k == VertexKind::Source || k == VertexKind::Isolated;
}

/// Reverses every arrow incident to a sink or source i. Arrow ids are kept.
inline Quiver mutate_at(const Quiver& q, Vertex i) {
  if (vertex_kind(q, i) == VertexKind::Neither) {
    throw VertexKindError("vertex " + std::to_string(i) + " is neither a sink nor a source");
  }
  std::vector<Arrow> arrows = q.arrows();
  for (auto& a : arrows) {
    if (a.source == i || a.target == i) std::swap(a.source, a.target);
  }
  return Quiver(q.num_vertices(), std::move(arrows));
}

// ---------------------------------------------------------------------------
// Dynkin recognition

enum class DynkinFamily { A, D, E, NotDynkin };

struct DynkinComponent {
  DynkinFamily family = DynkinFamily::NotDynkin;
  std::size_t rank = 0;  // number of vertices in the component

  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

inline std::string to_string(const DynkinComponent& c) {
  switch (c.family) {
    case DynkinFamily::A: return "A" + std::to_string(c.rank);
    case DynkinFamily::D: return "D" + std::to_string(c.rank);
    case DynkinFamily::E: return "E" + std::to_string(c.rank);
    case DynkinFamily::NotDynkin: return "NotDynkin";
  }
  return "?";
}

/// One entry per connected component of |Q|, ordered by smallest vertex.
struct DynkinType {
  std::vector<DynkinComponent> components;

  bool is_dynkin() const {
    return std::none_of(components.begin(), components.end(), [](const DynkinComponent& c) {
      return c.family == DynkinFamily::NotDynkin;
    });
  }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

inline std::vector<std::vector<Vertex>> connected_components(const UnderlyingGraph& g) {
  std::vector<std::size_t> parent(g.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) parent[find(u)] = find(v);
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::size_t> slot(g.n + 1, static_cast<std::size_t>(-1));
  for (Vertex v = 1; v <= g.n; ++v) {
    auto r = find(v);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

namespace detail {

inline DynkinComponent classify_component(const UnderlyingGraph& g,
                                          const std::vector<Vertex>& verts) {
  const DynkinComponent not_dynkin{DynkinFamily::NotDynkin, verts.size()};
  std::vector<char> in_comp(g.n + 1, 0);
  for (auto v : verts) in_comp[v] = 1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto e : g.edges)
    if (in_comp[e.first]) edges.push_back(e);
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return not_dynkin;
  // Connected with |E| = |V| - 1 means a tree.
  if (edges.size() + 1 != verts.size()) return not_dynkin;

  std::vector<std::vector<Vertex>> adj(g.n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Vertex> branch;
  for (auto v : verts) {
    if (adj[v].size() > 3) return not_dynkin;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return {DynkinFamily::A, verts.size()};
  if (branch.size() > 1) return not_dynkin;

  // Leg lengths from the unique branch vertex.
  std::vector<std::size_t> legs;
  for (auto start : adj[branch[0]]) {
    std::size_t len = 1;
    Vertex prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return {DynkinFamily::D, verts.size()};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
    return {DynkinFamily::E, verts.size()};
  }
  return not_dynkin;
}

}  // namespace detail

inline DynkinType dynkin_type(const Quiver& q) {
  auto g = q.underlying_graph();
  DynkinType t;
  for (const auto& comp : connected_components(g)) {
    t.components.push_back(detail::classify_component(g, comp));
  }
  return t;
}

inline std::string to_string(const DynkinType& t) {
  std::string s;
  for (std::size_t k = 0; k < t.components.size(); ++k) {
    if (k) s += " + ";
    s += to_string(t.components[k]);
  }
  return s.empty() ? "empty" : s;
}

}  // namespace coxrep

#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "coxrep/linrep.hpp"
#include "coxrep/quiver.hpp"

namespace gen {

using Rng = std::mt19937_64;

/// Every orientation of the given edge list on n vertices (2^edges quivers).
inline std::vector<coxrep::Quiver> orientations(std::size_t n,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<coxrep::Quiver> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<coxrep::Arrow> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      arrows.push_back(mask >> k & 1 ? coxrep::Arrow{b, a} : coxrep::Arrow{a, b});
    }
    out.emplace_back(n, std::move(arrows));
  }
  return out;
}

inline std::vector<coxrep::Quiver> type_a(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return orientations(n, edges);
}

/// D4 with branch vertex 2.
inline std::vector<coxrep::Quiver> type_d4() { return orientations(4, {{1, 2}, {2, 3}, {2, 4}}); }

inline coxrep::Quiver kronecker() { return coxrep::Quiver::from_pairs(2, {{1, 2}, {1, 2}}); }

inline coxrep::FpMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, coxrep::FieldSpec f) {
  std::uniform_int_distribution<int> entry(0, f.characteristic() - 1);
  coxrep::FpMatrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

inline coxrep::Representation random_rep_with_dims(Rng& rng, const coxrep::Quiver& q, coxrep::FieldSpec f,
                                                   const std::vector<int>& dims) {
  std::vector<coxrep::FpMatrix> mats;
  for (const auto& a : q.arrows()) mats.push_back(random_matrix(rng, dims[a.target - 1], dims[a.source - 1], f));
  return coxrep::Representation(q, f, dims, std::move(mats));
}

inline coxrep::Representation random_rep(Rng& rng, const coxrep::Quiver& q, coxrep::FieldSpec f, int max_dim) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::vector<int> dims(q.num_vertices());
  for (auto& d : dims) d = dim(rng);
  return random_rep_with_dims(rng, q, f, dims);
}

/// A uniformly random element of Hom(V, W), as a combination of a basis.
inline coxrep::Morphism random_morphism(Rng& rng, const coxrep::Representation& v, const coxrep::Representation& w) {
  auto basis = coxrep::hom_basis(v, w).basis;
  auto f = coxrep::zero_morphism(v, w);
  std::uniform_int_distribution<int> coeff(0, v.field().characteristic() - 1);
  for (const auto& b : basis) {
    int k = coeff(rng);
    for (std::size_t i = 0; i < f.comps.size(); ++i) f.comps[i] = f.comps[i] + b.comps[i].scaled(k);
  }
  return f;
}

}  // namespace gen

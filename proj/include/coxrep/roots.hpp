#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "coxrep/errors.hpp"
#include "coxrep/integer.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/weyl.hpp"

namespace coxrep {

/// Positive real roots found by a height-bounded orbit search. `complete` is
/// set when no reflection of a found root was discarded for exceeding the
/// bound, i.e. the search closed up and the set is all of Phi_re^+.
struct RootSet {
  std::vector<IntVector> roots;  // lexicographic order
  bool complete = false;

  bool contains(const IntVector& v) const {
    return std::binary_search(roots.begin(), roots.end(), v);
  }
  std::size_t size() const noexcept { return roots.size(); }
};

/// Orbit of the simple roots under the simple reflections, restricted to
/// positive vectors of height <= height_bound. Any positive real root is
/// reached from a simple root through positive roots of increasing height,
/// so nothing below the bound is missed.
inline RootSet positive_real_roots(const Quiver& q, const Integer& height_bound) {
  if (height_bound < 1) throw RangeError("height bound must be at least 1");
  const std::size_t n = q.num_vertices();
  WeylGroup g(q);
  std::set<IntVector> seen;
  std::deque<IntVector> frontier;
  for (Vertex i = 1; i <= n; ++i) {
    auto e = unit_vector(n, i);
    seen.insert(e);
    frontier.push_back(std::move(e));
  }
  bool complete = true;
  while (!frontier.empty()) {
    IntVector v = std::move(frontier.front());
    frontier.pop_front();
    for (Vertex i = 1; i <= n; ++i) {
      IntVector r = g.reflect(i, v);
      if (!is_positive(r)) continue;
      if (height(r) > height_bound) {
        complete = false;
        continue;
      }
      if (seen.insert(r).second) frontier.push_back(std::move(r));
    }
  }
  return RootSet{std::vector<IntVector>(seen.begin(), seen.end()), complete};
}

/// All positive roots of a Dynkin quiver; throws ScopeError otherwise.
inline RootSet dynkin_positive_roots(const Quiver& q) {
  if (!dynkin_type(q).is_dynkin()) {
    throw ScopeError("quiver of type " + to_string(dynkin_type(q)) + " is not Dynkin");
  }
  // The highest root of E8 has height 29.
  auto roots = positive_real_roots(q, Integer(64));
  if (!roots.complete) throw InvariantError("root orbit of a Dynkin quiver did not close");
  return roots;
}

namespace detail {

inline bool support_connected(const Quiver& q, const IntVector& alpha) {
  const std::size_t n = q.num_vertices();
  std::vector<char> in_support(n + 1, 0);
  Vertex start = 0;
  std::size_t count = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (alpha[v - 1] != 0) {
      in_support[v] = 1;
      ++count;
      if (!start) start = v;
    }
  }
  if (!start) return false;
  std::vector<char> reached(n + 1, 0);
  std::vector<Vertex> stack{start};
  reached[start] = 1;
  std::size_t seen = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      Vertex other = a.source == v ? a.target : (a.target == v ? a.source : 0);
      if (other && in_support[other] && !reached[other]) {
        reached[other] = 1;
        ++seen;
        stack.push_back(other);
      }
    }
  }
  return seen == count;
}

}  // namespace detail

/// alpha in M: connected support and (alpha, e_i) <= 0 for every vertex i.
inline bool in_fundamental_cone(const Quiver& q, const IntVector& alpha) {
  check_length(q, alpha);
  if (!is_nonnegative(alpha)) throw DimensionError("fundamental cone test needs alpha >= 0");
  if (is_zero(alpha)) throw DimensionError("fundamental cone test needs alpha != 0");
  if (!detail::support_connected(q, alpha)) return false;
  for (Vertex i = 1; i <= q.num_vertices(); ++i) {
    if (sym_form_with_simple(q, i, alpha) > 0) return false;
  }
  return true;
}

enum class RootClass { RealPositive, RealNegative, Imaginary, NotARoot };

inline const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::RealPositive: return "RealPositive";
    case RootClass::RealNegative: return "RealNegative";
    case RootClass::Imaginary: return "Imaginary";
    case RootClass::NotARoot: return "NotARoot";
  }
  return "?";
}

namespace detail {

/// Height-decreasing minimization of a positive vector: apply s_i whenever
/// (alpha, e_i) > 0. A positive real root walks down to a simple root, a
/// positive imaginary root walks down into M, and anything that leaves the
/// positive cone or gets stuck outside M was never a root.
inline RootClass classify_positive(const Quiver& q, IntVector alpha, const Integer& search_bound) {
  const std::size_t n = q.num_vertices();
  WeylGroup g(q);
  Integer steps = 0;
  while (true) {
    if (height(alpha) == 1) return RootClass::RealPositive;
    if (in_fundamental_cone(q, alpha)) return RootClass::Imaginary;
    Vertex pick = 0;
    for (Vertex i = 1; i <= n && !pick; ++i) {
      if (g.pair_with_simple(i, alpha) > 0) pick = i;
    }
    if (!pick) return RootClass::NotARoot;  // stuck outside M: disconnected support
    if (steps >= search_bound) {
      throw InconclusiveError("classification did not finish within " + search_bound.str() +
                              " reflection steps");
    }
    ++steps;
    alpha = g.reflect(pick, std::move(alpha));
    if (!is_nonnegative(alpha)) return RootClass::NotARoot;
  }
}

}  // namespace detail

/// Imaginary roots are the W-orbit of M, which lies in the positive cone, so
/// a negative vector is classified RealNegative or NotARoot.
inline RootClass classify_vector(const Quiver& q, const IntVector& alpha,
                                 const Integer& search_bound) {
  check_length(q, alpha);
  if (is_zero(alpha)) return RootClass::NotARoot;
  if (is_nonnegative(alpha)) return detail::classify_positive(q, alpha, search_bound);
  if (is_nonpositive(alpha)) {
    auto c = detail::classify_positive(q, negate(alpha), search_bound);
    return c == RootClass::RealPositive ? RootClass::RealNegative : RootClass::NotARoot;
  }
  return RootClass::NotARoot;
}

}  // namespace coxrep

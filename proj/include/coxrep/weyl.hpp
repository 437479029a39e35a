#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxrep/errors.hpp"
#include "coxrep/integer.hpp"
#include "coxrep/quiver.hpp"

namespace coxrep {

/// A product s_{i1} s_{i2} ... of simple reflections, letters in 1..n.
using Word = std::vector<Vertex>;

inline std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (auto i : w) s += "s" + std::to_string(i);
  return s;
}

/// The geometric data shared by all elements of W: the Cartan matrix
/// A_ij = (e_i, e_j). W only depends on |Q|, so two orientations of the same
/// graph give equal groups.
class WeylGroup {
 public:
  explicit WeylGroup(const Quiver& q) : n_(q.num_vertices()), cartan_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) cartan_[i * n_ + i] = 2;
    for (const auto& a : q.arrows()) {
      cartan_[(a.source - 1) * n_ + (a.target - 1)] -= 1;
      cartan_[(a.target - 1) * n_ + (a.source - 1)] -= 1;
    }
  }

  std::size_t rank() const noexcept { return n_; }

  long cartan(Vertex i, Vertex j) const { return cartan_[(i - 1) * n_ + (j - 1)]; }

  void check_letter(Vertex i) const {
    if (i < 1 || i > n_) {
      throw RangeError("generator s" + std::to_string(i) + " out of range 1.." +
                       std::to_string(n_));
    }
  }

  /// (e_i, v)
  Integer pair_with_simple(Vertex i, const IntVector& v) const {
    Integer total = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      long a = cartan_[(i - 1) * n_ + j];
      if (a != 0 && v[j] != 0) total += a * v[j];
    }
    return total;
  }

  /// s_i(v) = v - (e_i, v) e_i; only coordinate i changes.
  IntVector reflect(Vertex i, IntVector v) const {
    check_letter(i);
    if (v.size() != n_) throw DimensionError("vector length does not match the Weyl group rank");
    v[i - 1] -= pair_with_simple(i, v);
    return v;
  }

  /// M * s_i, updating the columns in place.
  void right_multiply(IntMatrix& m, Vertex i) const {
    check_letter(i);
    const IntVector col = m.column(i - 1);  // column i is itself overwritten
    for (std::size_t j = 0; j < n_; ++j) {
      long a = cartan_[(i - 1) * n_ + j];
      if (a == 0) continue;
      for (std::size_t r = 0; r < n_; ++r) {
        if (col[r] != 0) m.at(r, j) -= a * col[r];
      }
    }
  }

  /// s_i * M, updating row i in place.
  void left_multiply(IntMatrix& m, Vertex i) const {
    check_letter(i);
    std::vector<Integer> row(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      Integer acc = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        long a = cartan_[(i - 1) * n_ + k];
        if (a != 0 && m.at(k, c) != 0) acc += a * m.at(k, c);
      }
      row[c] = m.at(i - 1, c) - acc;
    }
    for (std::size_t c = 0; c < n_; ++c) m.at(i - 1, c) = std::move(row[c]);
  }

  IntMatrix matrix_of(const Word& w) const {
    IntMatrix m = IntMatrix::identity(n_);
    for (auto i : w) right_multiply(m, i);
    return m;
  }

  friend bool operator==(const WeylGroup&, const WeylGroup&) = default;

 private:
  std::size_t n_;
  std::vector<long> cartan_;
};

// ---------------------------------------------------------------------------
// Words

namespace detail {

/// Prefix-reflected simple roots of w. Stops at the first root that is not
/// positive; the returned flag says whether all of them were positive.
inline std::pair<std::vector<IntVector>, bool> prefix_roots(const WeylGroup& g, const Word& w) {
  std::vector<IntVector> roots;
  roots.reserve(w.size());
  IntMatrix m = IntMatrix::identity(g.rank());
  for (auto i : w) {
    g.check_letter(i);
    IntVector r = m.column(i - 1);
    if (!is_positive(r)) return {std::move(roots), false};
    roots.push_back(std::move(r));
    g.right_multiply(m, i);
  }
  return {std::move(roots), true};
}

inline bool is_reduced(const WeylGroup& g, const Word& w) {
  auto [roots, positive] = prefix_roots(g, w);
  if (!positive) return false;
  std::sort(roots.begin(), roots.end());
  return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
}

/// Left to right: keep a reduced prefix u. Appending s is reduced iff u(e_s)
/// is positive; otherwise -u(e_s) is the k-th prefix root of u and u*s is u
/// with letter k deleted (exchange condition).
inline Word reduce_word(const WeylGroup& g, const Word& w) {
  Word u;
  std::vector<IntVector> roots;
  IntMatrix m = IntMatrix::identity(g.rank());
  for (auto s : w) {
    g.check_letter(s);
    IntVector r = m.column(s - 1);
    if (is_positive(r)) {
      u.push_back(s);
      roots.push_back(std::move(r));
      g.right_multiply(m, s);
      continue;
    }
    IntVector target = negate(std::move(r));
    auto it = std::find(roots.begin(), roots.end(), target);
    if (it == roots.end()) {
      throw InvariantError("exchange condition failed: reflected root " + to_string(target) +
                           " is not an inversion of the prefix");
    }
    u.erase(u.begin() + (it - roots.begin()));
    std::tie(roots, std::ignore) = prefix_roots(g, u);
    m = g.matrix_of(u);
  }
  return u;
}

}  // namespace detail

inline bool is_reduced(const Quiver& q, const Word& w) {
  return detail::is_reduced(WeylGroup(q), w);
}

inline Word reduce_word(const Quiver& q, const Word& w) {
  WeylGroup g(q);
  if (detail::is_reduced(g, w)) return w;
  return detail::reduce_word(g, w);
}

// ---------------------------------------------------------------------------
// Elements

/// A group element: a reduced word together with its action matrix on Z^n
/// (column j holds w(e_j)) and the inverse matrix. Equality is matrix
/// equality, which is faithful.
class WeylElement {
 public:
  static WeylElement identity(const Quiver& q) {
    return WeylElement(std::make_shared<const WeylGroup>(q), Word{});
  }

  static WeylElement from_word(const Quiver& q, const Word& w) {
    return from_word(std::make_shared<const WeylGroup>(q), w);
  }

  static WeylElement from_word(std::shared_ptr<const WeylGroup> g, const Word& w) {
    Word reduced = detail::is_reduced(*g, w) ? w : detail::reduce_word(*g, w);
    return WeylElement(std::move(g), std::move(reduced));
  }

  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const IntMatrix& inverse_matrix() const noexcept { return inverse_; }
  const WeylGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const noexcept { return group_; }
  std::size_t rank() const noexcept { return group_->rank(); }

  IntVector act(const IntVector& v) const { return matrix_.apply(v); }
  IntVector act_inverse(const IntVector& v) const { return inverse_.apply(v); }

  bool is_identity() const noexcept { return word_.empty(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.matrix_ == b.matrix_ && *a.group_ == *b.group_;
  }

 private:
  WeylElement(std::shared_ptr<const WeylGroup> g, Word w)
      : group_(std::move(g)), word_(std::move(w)) {
    matrix_ = group_->matrix_of(word_);
    inverse_ = group_->matrix_of(Word(word_.rbegin(), word_.rend()));
  }

  std::shared_ptr<const WeylGroup> group_;
  Word word_;
  IntMatrix matrix_;
  IntMatrix inverse_;
};

inline IntVector simple_reflection(const Quiver& q, Vertex i, const IntVector& v) {
  q.check_vertex(i);
  check_length(q, v);
  IntVector out = v;
  out[i - 1] -= sym_form_with_simple(q, i, v);
  return out;
}

/// t_beta(v) = v - 2 (beta, v) / (beta, beta) * beta, required to be integral.
inline IntVector reflect_by_root(const Quiver& q, const IntVector& beta, const IntVector& v) {
  Integer bb = sym_form(q, beta, beta);
  if (bb == 0) throw SingularRootError("(beta, beta) = 0; t_beta is undefined");
  Integer num = 2 * sym_form(q, beta, v);
  if (num % bb != 0) {
    throw IntegralityError("t_beta(v) is not integral: 2(beta,v) = " + num.str() +
                           " is not divisible by (beta,beta) = " + bb.str());
  }
  return v - (num / bb) * beta;
}

inline void check_same_group(const WeylElement& a, const WeylElement& b) {
  if (!(a.group() == b.group())) throw MismatchError("elements belong to different Weyl groups");
}

inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
  check_same_group(a, b);
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return WeylElement::from_word(a.group_ptr(), w);
}

inline WeylElement invert(const WeylElement& a) {
  return WeylElement::from_word(a.group_ptr(), Word(a.word().rbegin(), a.word().rend()));
}

/// Ordered list of inversions induced by one reduced word.
struct InversionSet {
  std::vector<IntVector> roots;

  std::vector<IntVector> sorted() const {
    auto s = roots;
    std::sort(s.begin(), s.end());
    return s;
  }

  bool contains(const IntVector& v) const {
    return std::find(roots.begin(), roots.end(), v) != roots.end();
  }

  std::size_t size() const noexcept { return roots.size(); }
};

inline InversionSet inversion_set(const WeylGroup& g, const Word& w) {
  auto [roots, positive] = detail::prefix_roots(g, w);
  if (!positive || !detail::is_reduced(g, w)) {
    throw NonReducedError("word " + to_string(w) + " is not reduced");
  }
  return InversionSet{std::move(roots)};
}

inline InversionSet inversion_set(const Quiver& q, const Word& w) {
  return inversion_set(WeylGroup(q), w);
}

inline InversionSet inversion_set(const WeylElement& w) { return inversion_set(w.group(), w.word()); }

/// l(s_i w) < l(w), read off the sign of w^{-1}(e_i).
inline bool left_descent(const WeylElement& w, Vertex i) {
  w.group().check_letter(i);
  IntVector v = w.inverse_matrix().column(i - 1);
  bool nonneg = is_nonnegative(v), nonpos = is_nonpositive(v);
  if (!nonneg && !nonpos) {
    throw InvariantError("w^{-1}(e_" + std::to_string(i) + ") = " + to_string(v) +
                         " is not sign-coherent");
  }
  return nonpos;
}

inline bool left_descent(const Quiver& q, Vertex i, const WeylElement& w) {
  q.check_vertex(i);
  if (!(WeylGroup(q) == w.group())) throw MismatchError("element is not in the Weyl group of q");
  return left_descent(w, i);
}

// ---------------------------------------------------------------------------
// Coxeter elements and orientations

/// A word using every generator exactly once.
struct CoxeterElement {
  Word word;

  void validate(std::size_t n) const {
    if (word.size() != n) {
      throw RangeError("Coxeter element must use each of the " + std::to_string(n) +
                       " generators exactly once");
    }
    std::vector<char> seen(n + 1, 0);
    for (auto i : word) {
      if (i < 1 || i > n || seen[i]) {
        throw RangeError("Coxeter element " + to_string(word) + " is not a permutation of 1.." +
                         std::to_string(n));
      }
      seen[i] = 1;
    }
  }

  friend bool operator==(const CoxeterElement&, const CoxeterElement&) = default;
};

/// s_i precedes s_j whenever there is an arrow j -> i; among the available
/// generators the smallest index goes first. The first letter is a sink.
inline CoxeterElement coxeter_of_quiver(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  // i becomes available once every target of an arrow out of i is placed.
  std::vector<std::size_t> pending(n + 1, 0);
  for (const auto& a : q.arrows()) ++pending[a.source];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v)
    if (pending[v] == 0) ready.push(v);
  CoxeterElement c;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    c.word.push_back(v);
    for (const auto& a : q.arrows()) {
      if (a.target == v && --pending[a.source] == 0) ready.push(a.source);
    }
  }
  return c;
}

/// Orients each edge {i, j} towards whichever of i, j comes first in c.
inline Quiver quiver_of_coxeter(const UnderlyingGraph& g, const CoxeterElement& c) {
  c.validate(g.n);
  std::vector<std::size_t> pos(g.n + 1);
  for (std::size_t k = 0; k < c.word.size(); ++k) pos[c.word[k]] = k;
  std::vector<Arrow> arrows;
  arrows.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    if (pos[u] < pos[v]) arrows.push_back({v, u});
    else arrows.push_back({u, v});
  }
  return Quiver(g.n, std::move(arrows));
}

// ---------------------------------------------------------------------------
// c-sortable elements, c = c_Q

namespace detail {

inline Word relabel(const Word& w, const std::vector<Vertex>& old_to_new) {
  Word out;
  out.reserve(w.size());
  for (auto i : w) out.push_back(old_to_new.at(i));
  return out;
}

inline std::vector<Vertex> invert_map(const std::vector<Vertex>& new_to_old, std::size_t n_old) {
  std::vector<Vertex> old_to_new(n_old + 1, 0);
  for (std::size_t k = 0; k < new_to_old.size(); ++k) old_to_new[new_to_old[k]] = k + 1;
  return old_to_new;
}

/// Recursion on (quiver, reduced word): peel off the first letter of c.
inline bool is_c_sortable(const Quiver& q, const Word& reduced) {
  if (reduced.empty()) return true;
  const Vertex i = coxeter_of_quiver(q).word.front();
  auto w = WeylElement::from_word(q, reduced);
  if (left_descent(w, i)) {
    Word sw{i};
    sw.insert(sw.end(), reduced.begin(), reduced.end());
    return is_c_sortable(mutate_at(q, i), reduce_word(WeylGroup(q), sw));
  }
  for (const auto& root : inversion_set(w).roots) {
    if (root[i - 1] != 0) return false;  // not in the parabolic subgroup W_<s_i>
  }
  if (std::find(reduced.begin(), reduced.end(), i) != reduced.end()) {
    throw InvariantError("parabolic element has a reduced word using s" + std::to_string(i));
  }
  auto [sub, new_to_old] = q.delete_vertex(i);
  return is_c_sortable(sub, relabel(reduced, invert_map(new_to_old, q.num_vertices())));
}

}  // namespace detail

inline bool is_c_sortable(const Quiver& q, const WeylElement& w) {
  if (!(WeylGroup(q) == w.group())) throw MismatchError("element is not in the Weyl group of q");
  return detail::is_c_sortable(q, w.word());
}

/// All c_Q-sortable elements of length <= length_bound, ordered by length and
/// then by sorting word. An empty bound means "no bound" and is only accepted
/// for Dynkin quivers, where W is finite.
inline std::vector<WeylElement> enumerate_c_sortable(const Quiver& q,
                                                     std::optional<std::size_t> length_bound) {
  if (!length_bound && !dynkin_type(q).is_dynkin()) {
    throw ScopeError("an unbounded enumeration of c-sortable elements needs a Dynkin quiver");
  }
  const std::size_t bound = length_bound.value_or(static_cast<std::size_t>(-1));
  auto group = std::make_shared<const WeylGroup>(q);
  const Word c = coxeter_of_quiver(q).word;
  const std::size_t n = c.size();

  std::set<IntMatrix> seen;
  std::vector<Word> found;

  // State: the reduced word so far, its matrix, and the last subset J (bit k
  // set when c[k] belongs to J). Each step appends c_{J'} for nonempty J' in J.
  struct Frame {
    Word word;
    IntMatrix matrix;
    unsigned mask;
  };
  std::vector<Frame> stack;
  stack.push_back({Word{}, IntMatrix::identity(n), n ? (1u << n) - 1 : 0u});
  seen.insert(stack.back().matrix);
  found.push_back({});

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    // Visit subsets in decreasing numeric order so the output is deterministic.
    for (unsigned sub = f.mask; sub != 0; sub = (sub - 1) & f.mask) {
      Word w = f.word;
      IntMatrix m = f.matrix;
      bool reduced = true;
      for (std::size_t k = 0; k < n && reduced; ++k) {
        if (!(sub & (1u << k))) continue;
        if (w.size() + 1 > bound) {
          reduced = false;
          break;
        }
        Vertex s = c[k];
        if (!is_positive(m.column(s - 1))) {
          reduced = false;
          break;
        }
        group->right_multiply(m, s);
        w.push_back(s);
      }
      if (!reduced) continue;
      if (seen.insert(m).second) found.push_back(w);
      stack.push_back({std::move(w), std::move(m), sub});
    }
  }

  std::sort(found.begin(), found.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<WeylElement> out;
  out.reserve(found.size());
  for (const auto& w : found) out.push_back(WeylElement::from_word(group, w));
  return out;
}

}  // namespace coxrep

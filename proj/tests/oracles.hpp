#pragma once

// Independent reference implementations used only by the tests. They share
// nothing with the library beyond the Quiver/Representation containers:
// plain 64-bit arithmetic, whole-group enumeration, brute force over F_p.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "coxrep/linrep.hpp"
#include "coxrep/quiver.hpp"

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<long long>;  // n*n row-major, column j = w(e_j)
using Word = std::vector<std::size_t>;

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // 1-based (source, target)

  explicit Graph(const coxrep::Quiver& q) : n(q.num_vertices()) {
    for (const auto& a : q.arrows()) arrows.emplace_back(a.source, a.target);
  }

  // (e_i, e_j)
  long long form(std::size_t i, std::size_t j) const {
    long long v = i == j ? 2 : 0;
    for (auto [s, t] : arrows)
      if ((s == i && t == j) || (s == j && t == i)) v -= 1;
    return v;
  }

  Vec reflect(std::size_t i, Vec v) const {
    long long pair = 0;
    for (std::size_t j = 1; j <= n; ++j) pair += form(i, j) * v[j - 1];
    v[i - 1] -= pair;
    return v;
  }

  Mat identity() const {
    Mat m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
  }

  // s_i * M: reflect every column.
  Mat left(std::size_t i, const Mat& m) const {
    Mat out = m;
    for (std::size_t c = 0; c < n; ++c) {
      Vec col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = m[r * n + c];
      col = reflect(i, col);
      for (std::size_t r = 0; r < n; ++r) out[r * n + c] = col[r];
    }
    return out;
  }

  Vec apply(const Mat& m, const Vec& v) const {
    Vec out(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out[r] += m[r * n + c] * v[c];
    return out;
  }
};

inline bool positive(const Vec& v) {
  bool nz = false;
  for (auto x : v) {
    if (x < 0) return false;
    nz = nz || x != 0;
  }
  return nz;
}

inline bool negative(const Vec& v) {
  Vec w = v;
  for (auto& x : w) x = -x;
  return positive(w);
}

/// Positive roots by closing {e_i} under reflections, keeping only positive
/// vectors; finite groups only.
inline std::vector<Vec> positive_roots(const Graph& g, long long max_height = 64) {
  std::set<Vec> seen;
  std::deque<Vec> todo;
  for (std::size_t i = 1; i <= g.n; ++i) {
    Vec e(g.n, 0);
    e[i - 1] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Vec v = todo.front();
    todo.pop_front();
    for (std::size_t i = 1; i <= g.n; ++i) {
      Vec r = g.reflect(i, v);
      long long h = 0;
      for (auto x : r) h += x;
      if (positive(r) && h <= max_height && seen.insert(r).second) todo.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Every element of a finite Weyl group with its length and one reduced word
/// (breadth-first search on the Cayley graph, so BFS depth = length).
struct Element {
  Mat matrix;
  std::size_t length;
  Word word;  // w = s_{word[0]} ... s_{word[k-1]}
};

inline std::map<Mat, Element> all_elements(const Graph& g, std::size_t cap = 100000) {
  std::map<Mat, Element> out;
  std::deque<Mat> todo;
  out[g.identity()] = {g.identity(), 0, {}};
  todo.push_back(g.identity());
  while (!todo.empty()) {
    Mat m = todo.front();
    todo.pop_front();
    const Element cur = out[m];
    for (std::size_t i = 1; i <= g.n; ++i) {
      Mat next = g.left(i, m);
      if (out.count(next)) continue;
      Word w{i};
      w.insert(w.end(), cur.word.begin(), cur.word.end());
      out[next] = {next, cur.length + 1, w};
      todo.push_back(next);
      if (out.size() > cap) return out;
    }
  }
  return out;
}

inline Mat matrix_of(const Graph& g, const Word& w) {
  Mat m = g.identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it) m = g.left(*it, m);
  return m;
}

/// inv(w) = {alpha > 0 : w^{-1} alpha < 0}.
inline std::vector<Vec> inversions(const Graph& g, const Word& w) {
  Word rev(w.rbegin(), w.rend());
  Mat inv = matrix_of(g, rev);
  std::vector<Vec> out;
  for (const auto& a : positive_roots(g))
    if (negative(g.apply(inv, a))) out.push_back(a);
  return out;
}

/// All reduced words of the element with matrix m: w has a reduced word
/// ending in s_i exactly when l(w s_i) < l(w).
inline std::vector<Word> reduced_words(const Graph& g, const std::map<Mat, Element>& elems, const Mat& m) {
  const auto& e = elems.at(m);
  if (e.length == 0) return {Word{}};
  std::vector<Word> out;
  for (std::size_t i = 1; i <= g.n; ++i) {
    Mat ws = matrix_of(g, Word{i});
    // w s_i = M * S_i
    Mat prod(g.n * g.n, 0);
    for (std::size_t r = 0; r < g.n; ++r)
      for (std::size_t c = 0; c < g.n; ++c)
        for (std::size_t k = 0; k < g.n; ++k) prod[r * g.n + c] += m[r * g.n + k] * ws[k * g.n + c];
    if (elems.at(prod).length + 1 != e.length) continue;
    for (auto w : reduced_words(g, elems, prod)) {
      w.push_back(i);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// A Coxeter word for the quiver: a vertex may be written once every vertex
/// it has an arrow to has been written. Ties go to the LARGEST index, the
/// opposite of the library's choice; sortability must not depend on it.
inline Word coxeter_word(const Graph& g) {
  Word c;
  std::vector<bool> done(g.n + 1, false);
  while (c.size() < g.n) {
    for (std::size_t v = g.n; v >= 1; --v) {
      if (done[v]) continue;
      bool ready = true;
      for (auto [s, t] : g.arrows)
        if (s == v && !done[t]) ready = false;
      if (ready) {
        done[v] = true;
        c.push_back(v);
        break;
      }
    }
  }
  return c;
}

/// Does `word` split as c_{J1} c_{J2} ... c_{Jk} with J1 >= J2 >= ... >= Jk?
inline bool parses_as_sorting_word(const Word& c, const Word& word) {
  std::vector<std::size_t> pos(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) pos[c[k]] = k;
  std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t at, unsigned allowed) {
    if (at == word.size()) return true;
    // Take a block word[at..end) of strictly increasing c-positions within `allowed`.
    unsigned block = 0;
    std::size_t last = 0;
    for (std::size_t end = at; end < word.size(); ++end) {
      std::size_t p = pos[word[end]];
      if (end > at && p <= last) break;
      if (!(allowed >> p & 1)) break;
      last = p;
      block |= 1u << p;
      if (rec(end + 1, block)) return true;
    }
    return false;
  };
  return rec(0, (1u << c.size()) - 1);
}

/// Number of c-sortable elements: elements with at least one reduced word
/// that parses as a nested product of subwords of c.
inline std::size_t count_sortable(const coxrep::Quiver& q) {
  Graph g(q);
  auto elems = all_elements(g);
  Word c = coxeter_word(g);
  std::size_t count = 0;
  for (const auto& [m, e] : elems) {
    for (const auto& w : reduced_words(g, elems, m)) {
      if (parses_as_sorting_word(c, w)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline bool is_sortable(const coxrep::Quiver& q, const Word& any_word_of_w) {
  Graph g(q);
  auto elems = all_elements(g);
  Mat m = matrix_of(g, any_word_of_w);
  Word c = coxeter_word(g);
  for (const auto& w : reduced_words(g, elems, m))
    if (parses_as_sorting_word(c, w)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Brute force over F_p for tiny representations

/// Calls f on every d1 x d2 matrix over F_p.
inline void for_each_matrix(std::size_t rows, std::size_t cols, const coxrep::FieldSpec& f,
                            const std::function<void(const coxrep::FpMatrix&)>& visit) {
  coxrep::FpMatrix m(rows, cols, f);
  const std::size_t cells = rows * cols;
  const int p = f.characteristic();
  while (true) {
    visit(m);
    std::size_t k = 0;
    for (; k < cells; ++k) {
      int& x = m(k / cols, k % cols);
      if (++x < p) break;
      x = 0;
    }
    if (k == cells) return;
  }
}

/// Calls f on every tuple of vertex matrices (component k: rows[k] x cols[k]).
inline void for_each_tuple(const std::vector<std::pair<std::size_t, std::size_t>>& shapes,
                           const coxrep::FieldSpec& f,
                           const std::function<void(const std::vector<coxrep::FpMatrix>&)>& visit) {
  std::vector<coxrep::FpMatrix> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == shapes.size()) return visit(cur);
    for_each_matrix(shapes[k].first, shapes[k].second, f, [&](const coxrep::FpMatrix& m) {
      cur.push_back(m);
      rec(k + 1);
      cur.pop_back();
    });
  };
  rec(0);
}

inline bool commutes(const coxrep::Representation& v, const coxrep::Representation& w,
                     const std::vector<coxrep::FpMatrix>& comps) {
  const auto& q = v.quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(w.mat(a) * comps[arr.source - 1] == comps[arr.target - 1] * v.mat(a))) return false;
  }
  return true;
}

/// |Hom(V, W)| by trying every tuple of linear maps.
inline std::size_t hom_cardinality(const coxrep::Representation& v, const coxrep::Representation& w) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t i = 0; i < v.dims().size(); ++i) shapes.emplace_back(w.dims()[i], v.dims()[i]);
  std::size_t count = 0;
  for_each_tuple(shapes, v.field(), [&](const auto& comps) { count += commutes(v, w, comps); });
  return count;
}

/// Indecomposable iff the only idempotents of End(V) are 0 and 1, found by
/// trying every tuple of square matrices.
inline bool indecomposable(const coxrep::Representation& v) {
  if (v.total_dim() == 0) return false;
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (int d : v.dims()) shapes.emplace_back(d, d);
  bool found = false;
  for_each_tuple(shapes, v.field(), [&](const auto& comps) {
    if (found || !commutes(v, v, comps)) return;
    bool zero = true, one = true, idem = true;
    for (const auto& e : comps) {
      idem = idem && e * e == e;
      zero = zero && e.is_zero();
      one = one && e == coxrep::FpMatrix::identity(e.rows(), e.field());
    }
    if (idem && !zero && !one) found = true;
  });
  return !found;
}

/// V and W isomorphic iff some commuting tuple is invertible at every vertex.
inline bool isomorphic(const coxrep::Representation& v, const coxrep::Representation& w) {
  if (v.dims() != w.dims()) return false;
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (int d : v.dims()) shapes.emplace_back(d, d);
  bool found = false;
  for_each_tuple(shapes, v.field(), [&](const auto& comps) {
    if (found || !commutes(v, w, comps)) return;
    for (const auto& c : comps)
      if (coxrep::rank(c) != c.rows()) return;
    found = true;
  });
  return found;
}

/// Every representation of q with dimension vector `dims`.
inline void for_each_rep(const coxrep::Quiver& q, const std::vector<int>& dims, const coxrep::FieldSpec& f,
                         const std::function<void(const coxrep::Representation&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (const auto& a : q.arrows()) shapes.emplace_back(dims[a.target - 1], dims[a.source - 1]);
  for_each_tuple(shapes, f, [&](const auto& mats) { visit(coxrep::Representation(q, f, dims, mats)); });
}

}  // namespace oracle

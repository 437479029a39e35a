#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxrep/errors.hpp"
#include "coxrep/fp_matrix.hpp"
#include "coxrep/integer.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/roots.hpp"
#include "coxrep/weyl.hpp"

namespace coxrep {

/// A representation of a quiver over F_p: a space F_p^{dims[i-1]} at each
/// vertex i and, for arrow a: i -> j, a (dims_j x dims_i) matrix mats[a].
class Representation {
 public:
  Representation() = default;

  Representation(Quiver q, FieldSpec field, std::vector<int> dims, std::vector<FpMatrix> mats)
      : quiver_(std::move(q)), field_(field), dims_(std::move(dims)), mats_(std::move(mats)) {
    if (dims_.size() != quiver_.num_vertices()) {
      throw DimensionError("dimension vector has " + std::to_string(dims_.size()) +
                           " entries for a quiver on " + std::to_string(quiver_.num_vertices()) +
                           " vertices");
    }
    for (int d : dims_)
      if (d < 0) throw DimensionError("negative vertex dimension");
    if (mats_.size() != quiver_.num_arrows()) {
      throw DimensionError("expected one matrix per arrow (" +
                           std::to_string(quiver_.num_arrows()) + "), got " +
                           std::to_string(mats_.size()));
    }
    for (std::size_t a = 0; a < mats_.size(); ++a) {
      const auto& arr = quiver_.arrow(a);
      const auto& m = mats_[a];
      if (m.rows() != static_cast<std::size_t>(dim(arr.target)) ||
          m.cols() != static_cast<std::size_t>(dim(arr.source))) {
        throw DimensionError("matrix for arrow " + std::to_string(a) + " has shape " + m.shape() +
                             ", expected " + std::to_string(dim(arr.target)) + "x" +
                             std::to_string(dim(arr.source)));
      }
      if (!(m.field() == field_)) throw MismatchError("matrix over a different field");
    }
  }

  static Representation zero(const Quiver& q, FieldSpec f) {
    std::vector<FpMatrix> mats;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) mats.emplace_back(0, 0, f);
    return Representation(q, f, std::vector<int>(q.num_vertices(), 0), std::move(mats));
  }

  /// S_i: a copy of the field at vertex i, zero elsewhere.
  static Representation simple(const Quiver& q, FieldSpec f, Vertex i) {
    q.check_vertex(i);
    std::vector<int> dims(q.num_vertices(), 0);
    dims[i - 1] = 1;
    std::vector<FpMatrix> mats;
    for (const auto& a : q.arrows()) mats.emplace_back(dims[a.target - 1], dims[a.source - 1], f);
    return Representation(q, f, std::move(dims), std::move(mats));
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(Vertex i) const { return dims_.at(i - 1); }
  const std::vector<FpMatrix>& mats() const noexcept { return mats_; }
  const FpMatrix& mat(std::size_t arrow) const { return mats_.at(arrow); }
  IntVector dim_vector() const { return to_int_vector(dims_); }
  int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  FieldSpec field_{};
  std::vector<int> dims_;
  std::vector<FpMatrix> mats_;
};

inline void check_compatible(const Representation& v, const Representation& w) {
  if (!(v.quiver() == w.quiver())) throw MismatchError("representations of different quivers");
  if (!(v.field() == w.field())) throw MismatchError("representations over different fields");
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  check_compatible(a, b);
  const auto& q = a.quiver();
  std::vector<int> dims(q.num_vertices());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
  std::vector<FpMatrix> mats;
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const auto& arr = q.arrow(k);
    FpMatrix m(dims[arr.target - 1], dims[arr.source - 1], a.field());
    m.set_block(0, 0, a.mat(k));
    m.set_block(a.dim(arr.target), a.dim(arr.source), b.mat(k));
    mats.push_back(std::move(m));
  }
  return Representation(q, a.field(), std::move(dims), std::move(mats));
}

/// f: V -> W, one (dim W_i x dim V_i) component per vertex, with
/// W_a f_i = f_j V_a for every arrow a: i -> j.
struct Morphism {
  Representation source;
  Representation target;
  std::vector<FpMatrix> comps;

  void validate() const {
    check_compatible(source, target);
    const auto& q = source.quiver();
    if (comps.size() != q.num_vertices()) throw DimensionError("one component per vertex expected");
    for (Vertex i = 1; i <= q.num_vertices(); ++i) {
      const auto& c = comps[i - 1];
      if (c.rows() != static_cast<std::size_t>(target.dim(i)) ||
          c.cols() != static_cast<std::size_t>(source.dim(i))) {
        throw DimensionError("morphism component at vertex " + std::to_string(i) +
                             " has shape " + c.shape());
      }
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const auto& arr = q.arrow(a);
      if (!(target.mat(a) * comps[arr.source - 1] == comps[arr.target - 1] * source.mat(a))) {
        throw InvariantError("square for arrow " + std::to_string(a) + " does not commute");
      }
    }
  }

  const FpMatrix& at(Vertex i) const { return comps.at(i - 1); }

  bool is_injective() const {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (rank(comps[i]) != comps[i].cols()) return false;
    return true;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

inline Morphism identity_morphism(const Representation& v) {
  Morphism f{v, v, {}};
  for (int d : v.dims()) f.comps.push_back(FpMatrix::identity(d, v.field()));
  return f;
}

inline Morphism zero_morphism(const Representation& v, const Representation& w) {
  check_compatible(v, w);
  Morphism f{v, w, {}};
  for (Vertex i = 1; i <= v.quiver().num_vertices(); ++i) {
    f.comps.emplace_back(w.dim(i), v.dim(i), v.field());
  }
  return f;
}

/// g o f
inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(g.source == f.target)) throw MismatchError("morphisms are not composable");
  Morphism h{f.source, g.target, {}};
  for (std::size_t i = 0; i < f.comps.size(); ++i) h.comps.push_back(g.comps[i] * f.comps[i]);
  return h;
}

// ---------------------------------------------------------------------------
// Hom and Ext^1

/// The two-term complex
///   (+)_i Hom(V_i, W_i) --delta--> (+)_{a:i->j} Hom(V_i, W_j),
///   delta(f)_a = W_a f_i - f_j V_a,
/// whose kernel is Hom(V, W) and whose cokernel is Ext^1(V, W).
struct HomPresentation {
  std::vector<std::size_t> vertex_offset;  // f_i block, row-major dim W_i x dim V_i
  std::vector<std::size_t> arrow_offset;   // block for arrow a, row-major dim W_j x dim V_i
  FpMatrix delta;                          // codomain x domain
};

inline HomPresentation hom_presentation(const Representation& v, const Representation& w) {
  check_compatible(v, w);
  const auto& q = v.quiver();
  const FieldSpec f = v.field();
  HomPresentation p;
  p.vertex_offset.resize(q.num_vertices() + 1, 0);
  for (Vertex i = 1; i <= q.num_vertices(); ++i) {
    p.vertex_offset[i] = p.vertex_offset[i - 1] + static_cast<std::size_t>(w.dim(i) * v.dim(i));
  }
  p.arrow_offset.resize(q.num_arrows() + 1, 0);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    p.arrow_offset[a + 1] =
        p.arrow_offset[a] + static_cast<std::size_t>(w.dim(arr.target) * v.dim(arr.source));
  }
  p.delta = FpMatrix(p.arrow_offset.back(), p.vertex_offset.back(), f);
  auto var = [&](Vertex i, std::size_t r, std::size_t c) {
    return p.vertex_offset[i - 1] + r * static_cast<std::size_t>(v.dim(i)) + c;
  };
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& wa = w.mat(a);
    const auto& va = v.mat(a);
    const std::size_t rows = w.dim(arr.target), cols = v.dim(arr.source);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::size_t eq = p.arrow_offset[a] + r * cols + c;
        // (W_a f_i)(r, c) = sum_k W_a(r, k) f_i(k, c)
        for (std::size_t k = 0; k < static_cast<std::size_t>(w.dim(arr.source)); ++k) {
          int& x = p.delta(eq, var(arr.source, k, c));
          x = f.add(x, wa(r, k));
        }
        // (f_j V_a)(r, c) = sum_k f_j(r, k) V_a(k, c)
        for (std::size_t k = 0; k < static_cast<std::size_t>(v.dim(arr.target)); ++k) {
          int& x = p.delta(eq, var(arr.target, r, k));
          x = f.sub(x, va(k, c));
        }
      }
    }
  }
  return p;
}

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

inline std::size_t hom_dim(const Representation& v, const Representation& w) {
  auto p = hom_presentation(v, w);
  return p.delta.cols() - rank(p.delta);
}

inline HomSpace hom_basis(const Representation& v, const Representation& w) {
  auto p = hom_presentation(v, w);
  FpMatrix ker = kernel(p.delta);
  const auto& q = v.quiver();
  HomSpace space;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Morphism f{v, w, {}};
    for (Vertex i = 1; i <= q.num_vertices(); ++i) {
      FpMatrix c(w.dim(i), v.dim(i), v.field());
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t s = 0; s < c.cols(); ++s)
          c(r, s) = ker(p.vertex_offset[i - 1] + r * c.cols() + s, k);
      f.comps.push_back(std::move(c));
    }
    space.basis.push_back(std::move(f));
  }
  return space;
}

inline std::size_t ext1_dim(const Representation& v, const Representation& w) {
  auto p = hom_presentation(v, w);
  return p.delta.rows() - rank(p.delta);
}

// ---------------------------------------------------------------------------
// Reflection functors

namespace detail {

/// R_i^+(V) together with the inclusion of R_i^+(V)_i into (+)_{a:j->i} V_j.
struct PlusReflection {
  Representation rep;
  FpMatrix inclusion;
  std::vector<std::size_t> in_arrows;
  std::vector<std::size_t> offsets;  // block start of each summand
  std::size_t cokernel_dim = 0;      // dim coker((+) V_j -> V_i)
};

inline PlusReflection reflect_plus_data(const Representation& v, Vertex i) {
  const auto& q = v.quiver();
  if (!is_sink_or_isolated(q, i)) {
    throw VertexKindError("R+ needs a sink; vertex " + std::to_string(i) + " is " +
                          to_string(vertex_kind(q, i)));
  }
  const FieldSpec f = v.field();
  PlusReflection out;
  out.in_arrows = q.arrows_into(i);
  out.offsets.push_back(0);
  for (auto a : out.in_arrows) out.offsets.push_back(out.offsets.back() + v.dim(q.arrow(a).source));
  const std::size_t total = out.offsets.back();
  FpMatrix phi(v.dim(i), total, f);
  for (std::size_t k = 0; k < out.in_arrows.size(); ++k) phi.set_block(0, out.offsets[k], v.mat(out.in_arrows[k]));
  out.inclusion = kernel(phi);
  out.cokernel_dim = static_cast<std::size_t>(v.dim(i)) - rank(phi);

  Quiver mutated = mutate_at(q, i);
  std::vector<int> dims = v.dims();
  dims[i - 1] = static_cast<int>(out.inclusion.cols());
  std::vector<FpMatrix> mats = v.mats();
  for (std::size_t k = 0; k < out.in_arrows.size(); ++k) {
    auto a = out.in_arrows[k];
    std::size_t dj = out.offsets[k + 1] - out.offsets[k];
    mats[a] = out.inclusion.block(out.offsets[k], dj, 0, out.inclusion.cols());
  }
  out.rep = Representation(std::move(mutated), f, std::move(dims), std::move(mats));
  return out;
}

}  // namespace detail

/// R_i^+ at a sink i: the new space at i is ker((+)_{a:j->i} V_j -> V_i), and
/// each reversed arrow carries its component of the kernel inclusion. The
/// result is a representation of mutate_at(q, i).
inline Representation reflect_plus(const Representation& v, Vertex i) {
  return detail::reflect_plus_data(v, i).rep;
}

/// R_i^+(f): f_j away from i; at i, the restriction of (+) f_j to the kernels.
inline Morphism reflect_plus_mor(const Morphism& f, Vertex i) {
  auto rv = detail::reflect_plus_data(f.source, i);
  auto rw = detail::reflect_plus_data(f.target, i);
  const auto& q = f.source.quiver();
  const FieldSpec fld = f.source.field();
  FpMatrix sum(rw.offsets.back(), rv.offsets.back(), fld);
  for (std::size_t k = 0; k < rv.in_arrows.size(); ++k) {
    sum.set_block(rw.offsets[k], rv.offsets[k], f.at(q.arrow(rv.in_arrows[k]).source));
  }
  Morphism out{rv.rep, rw.rep, f.comps};
  out.comps[i - 1] = solve_in_basis(rw.inclusion, sum * rv.inclusion);
  return out;
}

/// R_i^- at a source i: the new space at i is coker(V_i -> (+)_{a:i->j} V_j),
/// presented on the complement of the image's echelon pivots.
inline Representation reflect_minus(const Representation& v, Vertex i) {
  const auto& q = v.quiver();
  if (!is_source_or_isolated(q, i)) {
    throw VertexKindError("R- needs a source; vertex " + std::to_string(i) + " is " +
                          to_string(vertex_kind(q, i)));
  }
  const FieldSpec f = v.field();
  auto out_arrows = q.arrows_out_of(i);
  std::vector<std::size_t> offsets{0};
  for (auto a : out_arrows) offsets.push_back(offsets.back() + v.dim(q.arrow(a).target));
  FpMatrix psi(offsets.back(), v.dim(i), f);
  for (std::size_t k = 0; k < out_arrows.size(); ++k) psi.set_block(offsets[k], 0, v.mat(out_arrows[k]));
  Quotient quot = quotient_by_column_span(psi);

  Quiver mutated = mutate_at(q, i);
  std::vector<int> dims = v.dims();
  dims[i - 1] = static_cast<int>(quot.projection.rows());
  std::vector<FpMatrix> mats = v.mats();
  for (std::size_t k = 0; k < out_arrows.size(); ++k) {
    mats[out_arrows[k]] =
        quot.projection.block(0, quot.projection.rows(), offsets[k], offsets[k + 1] - offsets[k]);
  }
  return Representation(std::move(mutated), f, std::move(dims), std::move(mats));
}

/// R_i^- R_i^+ (V): drops the S_i summands of V at a sink i.
inline Representation strip_simple_summands(const Representation& v, Vertex i) {
  if (vertex_kind(v.quiver(), i) != VertexKind::Sink &&
      vertex_kind(v.quiver(), i) != VertexKind::Isolated) {
    throw VertexKindError("vertex " + std::to_string(i) + " is not a sink");
  }
  auto plus = detail::reflect_plus_data(v, i);
  Representation back = reflect_minus(plus.rep, i);
  std::vector<int> expected = v.dims();
  expected[i - 1] -= static_cast<int>(plus.cokernel_dim);
  if (back.dims() != expected) {
    throw InvariantError("R-R+ changed the dimension vector by more than the S_i summands");
  }
  return back;
}

// ---------------------------------------------------------------------------
// Indecomposables

/// The unique indecomposable with dimension vector alpha (a positive real
/// root of a Dynkin quiver). A breadth-first search over (vector, quiver)
/// pairs finds sink reflections carrying alpha to a simple root; R^- applied
/// along the reversed path rebuilds the module from that simple.
inline Representation indec_of_real_root(const Quiver& q, const IntVector& alpha, FieldSpec field) {
  check_length(q, alpha);
  auto roots = dynkin_positive_roots(q);
  if (!roots.contains(alpha)) {
    throw NotARootError(to_string(alpha) + " is not a positive real root");
  }
  struct Node {
    IntVector vec;
    Quiver quiver;
    std::size_t parent;
    Vertex via;
  };
  std::vector<Node> nodes{{alpha, q, 0, 0}};
  std::set<std::pair<IntVector, std::vector<Arrow>>> seen{{alpha, q.arrows()}};
  std::size_t goal = static_cast<std::size_t>(-1);
  for (std::size_t head = 0; head < nodes.size() && goal == static_cast<std::size_t>(-1); ++head) {
    if (height(nodes[head].vec) == 1) {
      goal = head;
      break;
    }
    for (Vertex i = 1; i <= q.num_vertices(); ++i) {
      if (vertex_kind(nodes[head].quiver, i) != VertexKind::Sink) continue;
      IntVector next = simple_reflection(nodes[head].quiver, i, nodes[head].vec);
      if (!is_positive(next)) continue;
      Quiver mq = mutate_at(nodes[head].quiver, i);
      if (!seen.insert({next, mq.arrows()}).second) continue;
      nodes.push_back({std::move(next), std::move(mq), head, i});
    }
  }
  if (goal == static_cast<std::size_t>(-1)) {
    throw InvariantError("no sink-reflection path from " + to_string(alpha) + " to a simple root");
  }
  Vertex simple_vertex = 0;
  for (Vertex i = 1; i <= q.num_vertices(); ++i)
    if (nodes[goal].vec[i - 1] == 1) simple_vertex = i;
  Representation v = Representation::simple(nodes[goal].quiver, field, simple_vertex);
  for (std::size_t k = goal; k != 0; k = nodes[k].parent) v = reflect_minus(v, nodes[k].via);
  if (!(v.dim_vector() == alpha) || !(v.quiver() == q)) {
    throw InvariantError("reflection path did not reproduce " + to_string(alpha));
  }
  return v;
}

/// True iff End(V) has no idempotent besides 0 and 1. Enumerates End(V)
/// exhaustively, so total dimension is capped by `guard`.
inline bool is_indecomposable(const Representation& v, int guard = 12) {
  if (v.is_zero()) return false;
  if (v.total_dim() > guard) {
    throw ResourceError("total dimension " + std::to_string(v.total_dim()) +
                        " exceeds the indecomposability guard " + std::to_string(guard));
  }
  const auto basis = hom_basis(v, v).basis;
  const int p = v.field().characteristic();
  double size = std::pow(static_cast<double>(p), static_cast<double>(basis.size()));
  if (size > static_cast<double>(1u << 22)) {
    throw ResourceError("End(V) has dimension " + std::to_string(basis.size()) +
                        ", too large to enumerate");
  }
  const auto n = v.quiver().num_vertices();
  std::vector<int> coeff(basis.size(), 0);
  while (true) {
    std::size_t s = 0;
    while (s < coeff.size() && ++coeff[s] == p) coeff[s++] = 0;
    if (s == coeff.size()) break;
    bool idempotent = true, is_identity = true;
    for (std::size_t i = 0; i < n && idempotent; ++i) {
      FpMatrix e(v.dims()[i], v.dims()[i], v.field());
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeff[k]) e = e + basis[k].comps[i].scaled(coeff[k]);
      idempotent = (e * e == e);
      is_identity = is_identity && e == FpMatrix::identity(e.rows(), v.field());
    }
    if (idempotent && !is_identity) return false;
  }
  return true;
}

/// Multiplicity of each indecomposable summand, keyed by dimension vector.
using Decomposition = std::map<IntVector, int>;

/// The indecomposables of a Dynkin quiver with their Hom-dimension matrix
/// H[I][J] = dim Hom(I, J). H is invertible, so dim Hom(I, V) for all I
/// determines the multiplicities of V.
class IndecomposableCatalog {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  IndecomposableCatalog(const Quiver& q, FieldSpec field) : quiver_(q), field_(field) {
    roots_ = dynkin_positive_roots(q).roots;
    for (const auto& r : roots_) reps_.push_back(indec_of_real_root(q, r, field));
    const std::size_t n = roots_.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(hom_dim(reps_[i], reps_[j]));
      a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) throw InvariantError("Hom matrix of the indecomposables is singular");
      std::swap(a[piv], a[col]);
      Rational s = a[col][col];
      for (auto& x : a[col]) x /= s;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational factor = a[r][col];
        for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    inverse_.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = a[i][n + j];
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<IntVector>& roots() const noexcept { return roots_; }
  const std::vector<Representation>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return roots_.size(); }

  std::size_t index_of(const IntVector& root) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), root);
    if (it == roots_.end() || *it != root) {
      throw NotARootError(to_string(root) + " is not a positive real root");
    }
    return static_cast<std::size_t>(it - roots_.begin());
  }

  const Representation& indecomposable(const IntVector& root) const { return reps_[index_of(root)]; }

  Decomposition decompose(const Representation& v) const {
    if (!(v.quiver() == quiver_) || !(v.field() == field_)) {
      throw MismatchError("representation does not belong to this catalog's quiver and field");
    }
    const std::size_t n = roots_.size();
    std::vector<Rational> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = static_cast<long>(hom_dim(reps_[i], v));
    Decomposition out;
    IntVector total = zero_vector(quiver_.num_vertices());
    for (std::size_t j = 0; j < n; ++j) {
      Rational m = 0;
      for (std::size_t i = 0; i < n; ++i) m += inverse_[j][i] * h[i];
      if (denominator(m) != 1 || m < 0) {
        throw InvariantError("non-integral or negative multiplicity while decomposing " +
                             to_string(v.dim_vector()));
      }
      auto mult = static_cast<int>(numerator(m));
      if (mult == 0) continue;
      out[roots_[j]] = mult;
      total = total + Integer(mult) * roots_[j];
    }
    if (total != v.dim_vector()) {
      throw InvariantError("summands of " + to_string(v.dim_vector()) + " do not add up");
    }
    return out;
  }

  bool isomorphic(const Representation& v, const Representation& w) const {
    return v.dims() == w.dims() && decompose(v) == decompose(w);
  }

 private:
  Quiver quiver_;
  FieldSpec field_;
  std::vector<IntVector> roots_;
  std::vector<Representation> reps_;
  std::vector<std::vector<Rational>> inverse_;
};

inline Decomposition decompose(const Representation& v) {
  return IndecomposableCatalog(v.quiver(), v.field()).decompose(v);
}

// ---------------------------------------------------------------------------
// Subrepresentations and extensions

struct Subrep {
  Representation sub;
  Morphism inclusion;
};

inline void check_small_field(const FieldSpec& f, const char* what) {
  if (f.characteristic() > 3) {
    throw ScopeError(std::string(what) + " is only supported over F_2 and F_3");
  }
}

/// Calls visit(const Subrep&) once per subrepresentation U of V, i.e. per
/// tuple of subspaces U_i with V_a(U_i) in U_j for every arrow a: i -> j.
template <typename Visit>
void for_each_subrep(const Representation& v, Visit&& visit, unsigned long long guard = 1000000) {
  check_small_field(v.field(), "subrepresentation enumeration");
  const auto& q = v.quiver();
  const FieldSpec f = v.field();
  const std::size_t n = q.num_vertices();
  unsigned long long product = 1;
  for (int d : v.dims()) {
    product *= count_subspaces(d, f.characteristic());
    if (product > guard) {
      throw ResourceError("more than " + std::to_string(guard) + " subspace tuples to check");
    }
  }
  std::vector<std::vector<FpMatrix>> subspaces(n);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_subspace(v.dims()[i], f, [&](const FpMatrix& b) { subspaces[i].push_back(b); });
  }
  std::vector<const FpMatrix*> chosen(n, nullptr);
  auto closed = [&](std::size_t a) {
    const auto& arr = q.arrow(a);
    const FpMatrix& us = *chosen[arr.source - 1];
    const FpMatrix& ut = *chosen[arr.target - 1];
    FpMatrix image = v.mat(a) * us;
    FpMatrix both(ut.rows(), ut.cols() + image.cols(), f);
    both.set_block(0, 0, ut);
    both.set_block(0, ut.cols(), image);
    return rank(both) == ut.cols();
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      std::vector<int> dims(n);
      for (std::size_t k = 0; k < n; ++k) dims[k] = static_cast<int>(chosen[k]->cols());
      std::vector<FpMatrix> mats;
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        mats.push_back(solve_in_basis(*chosen[arr.target - 1], v.mat(a) * *chosen[arr.source - 1]));
      }
      Representation u(q, f, std::move(dims), std::move(mats));
      Morphism inc{u, v, {}};
      for (std::size_t k = 0; k < n; ++k) inc.comps.push_back(*chosen[k]);
      visit(Subrep{std::move(u), std::move(inc)});
      return;
    }
    for (const auto& b : subspaces[i]) {
      chosen[i] = &b;
      bool ok = true;
      for (std::size_t a = 0; a < q.num_arrows() && ok; ++a) {
        const auto& arr = q.arrow(a);
        // Check each arrow once, as soon as both ends are fixed.
        std::size_t last = std::max(arr.source, arr.target) - 1;
        if (last == i) ok = closed(a);
      }
      if (ok) self(self, i + 1);
    }
    chosen[i] = nullptr;
  };
  rec(rec, 0);
}

inline std::vector<Subrep> enumerate_subreps(const Representation& v,
                                             unsigned long long guard = 1000000) {
  std::vector<Subrep> out;
  for_each_subrep(v, [&](const Subrep& s) { out.push_back(s); }, guard);
  return out;
}

/// Calls visit(const Representation&) with the middle term Y of one extension
/// 0 -> X -> Y -> Z -> 0 per class in Ext^1(Z, X), the split one first.
/// Y_i = X_i (+) Z_i and Y_a = [[X_a, psi_a], [0, Z_a]], where psi runs over
/// the span of a complement to the image of the Hom presentation map.
template <typename Visit>
void for_each_extension(const Representation& z, const Representation& x, Visit&& visit,
                        std::size_t guard = 6) {
  check_small_field(z.field(), "extension enumeration");
  auto pres = hom_presentation(z, x);
  Quotient quot = quotient_by_column_span(pres.delta);
  const std::size_t e = quot.complement.size();
  if (e > guard) {
    throw ResourceError("Ext^1 has dimension " + std::to_string(e) + ", above the guard " +
                        std::to_string(guard));
  }
  const auto& q = z.quiver();
  const FieldSpec f = z.field();
  const int p = f.characteristic();
  std::vector<int> dims(q.num_vertices());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = x.dims()[i] + z.dims()[i];
  std::vector<int> coeff(e, 0);
  while (true) {
    std::vector<int> psi(pres.delta.rows(), 0);
    for (std::size_t k = 0; k < e; ++k) psi[quot.complement[k]] = coeff[k];
    std::vector<FpMatrix> mats;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const auto& arr = q.arrow(a);
      const std::size_t xs = x.dim(arr.source), xt = x.dim(arr.target);
      const std::size_t zs = z.dim(arr.source), zt = z.dim(arr.target);
      FpMatrix m(xt + zt, xs + zs, f);
      m.set_block(0, 0, x.mat(a));
      m.set_block(xt, xs, z.mat(a));
      for (std::size_t r = 0; r < xt; ++r)
        for (std::size_t c = 0; c < zs; ++c) m(r, xs + c) = psi[pres.arrow_offset[a] + r * zs + c];
      mats.push_back(std::move(m));
    }
    visit(Representation(q, f, dims, std::move(mats)));
    std::size_t s = 0;
    while (s < e && ++coeff[s] == p) coeff[s++] = 0;
    if (s == e) break;
  }
}

inline std::vector<Representation> enumerate_extensions(const Representation& z,
                                                        const Representation& x,
                                                        std::size_t guard = 6) {
  std::vector<Representation> out;
  for_each_extension(z, x, [&](const Representation& y) { out.push_back(y); }, guard);
  return out;
}

}  // namespace coxrep

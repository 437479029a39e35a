#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxrep/errors.hpp"
#include "coxrep/fp_matrix.hpp"
#include "coxrep/integer.hpp"
#include "coxrep/linrep.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/roots.hpp"
#include "coxrep/weyl.hpp"

namespace coxrep {

/// A finite torsion-free class, stored as the dimension vectors of its
/// indecomposables (one indecomposable per positive real root in Dynkin
/// type, so nothing is lost).
class TorsionFreeClass {
 public:
  TorsionFreeClass() = default;

  TorsionFreeClass(Quiver q, FieldSpec field, std::vector<IntVector> roots)
      : quiver_(std::move(q)), field_(field), roots_(std::move(roots)) {
    for (const auto& r : roots_) {
      check_length(quiver_, r);
      if (classify_vector(quiver_, r, Integer(100000)) != RootClass::RealPositive) {
        throw NotARootError(to_string(r) + " is not a positive real root");
      }
    }
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<IntVector>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool contains(const IntVector& r) const {
    return std::binary_search(roots_.begin(), roots_.end(), r);
  }

  friend bool operator==(const TorsionFreeClass&, const TorsionFreeClass&) = default;

 private:
  Quiver quiver_;
  FieldSpec field_{};
  std::vector<IntVector> roots_;
};

/// F(w): the indecomposables whose dimension vectors lie in inv(w).
inline TorsionFreeClass tfc_of_sortable(const Quiver& q, const WeylElement& w,
                                        FieldSpec field = FieldSpec(2)) {
  if (!is_c_sortable(q, w)) {
    throw NotSortableError(to_string(w.word()) + " is not c-sortable for this quiver");
  }
  return TorsionFreeClass(q, field, inversion_set(w).roots);
}

namespace detail {

/// Peels the first letter i of c_Q (a sink). Without e_i the class lives on
/// Q \ {i}; with e_i, dropping S_i and reflecting gives a class on mu_i(Q)
/// with one fewer member, and w = s_i w'.
inline Word sortable_word_of_roots(const Quiver& q, const std::vector<IntVector>& roots) {
  if (roots.empty()) return {};
  const std::size_t n = q.num_vertices();
  const Vertex i = coxeter_of_quiver(q).word.front();
  const IntVector ei = unit_vector(n, i);
  const bool has_simple = std::find(roots.begin(), roots.end(), ei) != roots.end();

  if (!has_simple) {
    for (const auto& r : roots) {
      if (r[i - 1] != 0) {
        throw InvariantError("class without S" + std::to_string(i) + " has member " +
                             to_string(r) + " supported at " + std::to_string(i));
      }
    }
    auto [sub, new_to_old] = q.delete_vertex(i);
    std::vector<IntVector> restricted;
    for (const auto& r : roots) {
      IntVector s;
      for (Vertex v : new_to_old) s.push_back(r[v - 1]);
      restricted.push_back(std::move(s));
    }
    Word w = sortable_word_of_roots(sub, restricted);
    for (auto& letter : w) letter = new_to_old[letter - 1];
    return w;
  }

  std::set<IntVector> reflected;
  for (const auto& r : roots) {
    if (r == ei) continue;
    IntVector s = simple_reflection(q, i, r);
    if (!is_positive(s)) {
      throw InvariantError("reflecting " + to_string(r) + " at " + std::to_string(i) +
                           " left the positive cone");
    }
    reflected.insert(std::move(s));
  }
  if (reflected.size() + 1 != roots.size()) {
    throw InvariantError("reflected class does not have exactly one fewer member");
  }
  Word w{i};
  Word rest = sortable_word_of_roots(mutate_at(q, i),
                                     std::vector<IntVector>(reflected.begin(), reflected.end()));
  w.insert(w.end(), rest.begin(), rest.end());
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute-force oracle

/// Decides the torsion-free property for sets of indecomposables of a Dynkin
/// quiver by direct enumeration: for each indecomposable, which
/// indecomposables occur as summands of its subrepresentations; for each
/// ordered pair (X, Z), which occur as summands of middle terms of
/// extensions of Z by X. Both are cached as bitmasks over the catalog.
class TorsionOracle {
 public:
  using Mask = std::uint64_t;

  TorsionOracle(const Quiver& q, FieldSpec field, std::size_t guard = 12)
      : catalog_(checked_catalog(q, field, guard)) {
    const std::size_t n = catalog_.size();
    sub_.assign(n, std::nullopt);
    ext_.assign(n * n, std::nullopt);
  }

  const IndecomposableCatalog& catalog() const noexcept { return catalog_; }
  std::size_t size() const noexcept { return catalog_.size(); }

  Mask mask_of(const std::vector<IntVector>& roots) const {
    Mask m = 0;
    for (const auto& r : roots) m |= Mask{1} << catalog_.index_of(r);
    return m;
  }

  std::vector<IntVector> roots_of(Mask m) const {
    std::vector<IntVector> out;
    for (std::size_t k = 0; k < size(); ++k)
      if (m >> k & 1) out.push_back(catalog_.roots()[k]);
    return out;
  }

  /// Summands of subrepresentations of the k-th indecomposable.
  Mask subrep_summands(std::size_t k) {
    if (!sub_[k]) {
      Mask m = 0;
      for_each_subrep(catalog_.reps()[k], [&](const Subrep& s) { m |= summands(s.sub); });
      sub_[k] = m;
    }
    return *sub_[k];
  }

  /// Summands of middle terms Y of 0 -> X -> Y -> Z -> 0.
  Mask extension_summands(std::size_t x, std::size_t z) {
    auto& slot = ext_[x * size() + z];
    if (!slot) {
      Mask m = 0;
      for_each_extension(catalog_.reps()[z], catalog_.reps()[x],
                         [&](const Representation& y) { m |= summands(y); });
      slot = m;
    }
    return *slot;
  }

  bool subrep_closed(Mask f) {
    for (std::size_t k = 0; k < size(); ++k)
      if ((f >> k & 1) && (subrep_summands(k) & ~f)) return false;
    return true;
  }

  bool extension_closed(Mask f) {
    for (std::size_t x = 0; x < size(); ++x) {
      if (!(f >> x & 1)) continue;
      for (std::size_t z = 0; z < size(); ++z)
        if ((f >> z & 1) && (extension_summands(x, z) & ~f)) return false;
    }
    return true;
  }

  bool is_torsion_free(Mask f) { return subrep_closed(f) && extension_closed(f); }

 private:
  static IndecomposableCatalog checked_catalog(const Quiver& q, FieldSpec field, std::size_t guard) {
    IndecomposableCatalog cat(q, field);  // ScopeError outside Dynkin type
    if (cat.size() > guard || cat.size() > 63) {
      throw ResourceError(std::to_string(cat.size()) + " indecomposables exceed the guard " +
                          std::to_string(guard));
    }
    return cat;
  }

  Mask summands(const Representation& v) const {
    Mask m = 0;
    for (const auto& [root, mult] : catalog_.decompose(v)) m |= Mask{1} << catalog_.index_of(root);
    return m;
  }

  IndecomposableCatalog catalog_;
  std::vector<std::optional<Mask>> sub_;
  std::vector<std::optional<Mask>> ext_;
};

inline bool is_torsion_free_class(TorsionOracle& oracle, const TorsionFreeClass& f) {
  return oracle.is_torsion_free(oracle.mask_of(f.roots()));
}

inline bool is_torsion_free_class(const Quiver& q, const TorsionFreeClass& f) {
  if (!(f.quiver() == q)) throw MismatchError("class belongs to a different quiver");
  TorsionOracle oracle(q, f.field());
  return is_torsion_free_class(oracle, f);
}

/// w with F(w) = F. With `checked`, F is first run through the oracle.
inline WeylElement sortable_of_tfc(const Quiver& q, const TorsionFreeClass& f, bool checked = false) {
  if (!(f.quiver() == q)) throw MismatchError("class belongs to a different quiver");
  if (checked && !is_torsion_free_class(q, f)) {
    throw NotTorsionFreeError("the given roots do not form a torsion-free class");
  }
  Word w = detail::sortable_word_of_roots(q, f.roots());
  if (!is_reduced(q, w)) throw InvariantError("recovered word " + to_string(w) + " is not reduced");
  return WeylElement::from_word(q, w);
}

/// Sorted by size, then lexicographically by root list.
inline void sort_classes(std::vector<TorsionFreeClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.roots() < b.roots();
  });
}

inline std::vector<TorsionFreeClass> enumerate_tfc(TorsionOracle& oracle) {
  const auto& cat = oracle.catalog();
  std::vector<TorsionFreeClass> out;
  const TorsionOracle::Mask total = TorsionOracle::Mask{1} << oracle.size();
  for (TorsionOracle::Mask m = 0; m < total; ++m) {
    if (oracle.is_torsion_free(m)) out.emplace_back(cat.quiver(), cat.field(), oracle.roots_of(m));
  }
  sort_classes(out);
  return out;
}

inline std::vector<TorsionFreeClass> enumerate_tfc(const Quiver& q, FieldSpec field = FieldSpec(2),
                                                   std::size_t guard = 12) {
  TorsionOracle oracle(q, field, guard);
  return enumerate_tfc(oracle);
}

// ---------------------------------------------------------------------------
// Bijection check

struct BijectionRow {
  Word word;
  std::vector<IntVector> roots;
};

struct BijectionReport {
  std::size_t sortable_count = 0;
  std::size_t tfc_count = 0;
  bool counts_equal = false;
  bool injective = false;
  bool lands_in_tfc = false;
  bool round_trip = false;          // sortable_of_tfc(F(w)) = w
  bool inverse_round_trip = false;  // F(sortable_of_tfc(F)) = F
  bool pass = false;
  std::vector<BijectionRow> rows;   // one per sortable element
  std::vector<std::string> gaps;    // failures and skipped checks
};

inline BijectionReport verify_bijection(const Quiver& q, FieldSpec field = FieldSpec(2)) {
  BijectionReport r;
  std::vector<WeylElement> sortables;
  std::vector<TorsionFreeClass> classes;
  try {
    sortables = enumerate_c_sortable(q, std::nullopt);
    r.sortable_count = sortables.size();
  } catch (const Error& e) {
    r.gaps.push_back(std::string("sortable enumeration: ") + e.what());
  }
  try {
    classes = enumerate_tfc(q, field);
    r.tfc_count = classes.size();
  } catch (const Error& e) {
    r.gaps.push_back(std::string("torsion-free enumeration: ") + e.what());
  }
  if (!r.gaps.empty()) return r;

  r.counts_equal = r.sortable_count == r.tfc_count;
  if (!r.counts_equal) {
    r.gaps.push_back(std::to_string(r.sortable_count) + " sortable elements but " +
                     std::to_string(r.tfc_count) + " torsion-free classes");
  }

  std::set<std::vector<IntVector>> images;
  std::set<std::vector<IntVector>> known;
  for (const auto& c : classes) known.insert(c.roots());
  r.lands_in_tfc = true;
  r.round_trip = true;
  for (const auto& w : sortables) {
    try {
      auto f = tfc_of_sortable(q, w, field);
      r.rows.push_back({w.word(), f.roots()});
      images.insert(f.roots());
      if (!known.count(f.roots())) {
        r.lands_in_tfc = false;
        r.gaps.push_back("F(" + to_string(w.word()) + ") is not a torsion-free class");
      }
      if (!(sortable_of_tfc(q, f) == w)) {
        r.round_trip = false;
        r.gaps.push_back("round trip fails at " + to_string(w.word()));
      }
    } catch (const Error& e) {
      r.lands_in_tfc = r.round_trip = false;
      r.gaps.push_back("at " + to_string(w.word()) + ": " + e.what());
    }
  }
  r.injective = images.size() == sortables.size();
  if (!r.injective) r.gaps.push_back("two sortable elements share an inversion set");

  r.inverse_round_trip = true;
  for (const auto& f : classes) {
    try {
      auto w = sortable_of_tfc(q, f);
      if (!(tfc_of_sortable(q, w, field) == f)) {
        r.inverse_round_trip = false;
        r.gaps.push_back("inverse round trip fails at a class of size " + std::to_string(f.size()));
      }
    } catch (const Error& e) {
      r.inverse_round_trip = false;
      r.gaps.push_back(std::string("inverse map: ") + e.what());
    }
  }
  r.pass = r.counts_equal && r.injective && r.lands_in_tfc && r.round_trip && r.inverse_round_trip;
  return r;
}

}  // namespace coxrep

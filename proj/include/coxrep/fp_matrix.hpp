#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxrep/errors.hpp"

namespace coxrep {

/// The prime field F_p. Only small primes are supported; subspace and
/// extension enumeration is exhaustive over the field.
class FieldSpec {
 public:
  explicit FieldSpec(int p = 2) : p_(p) {
    if (p != 2 && p != 3 && p != 5) {
      throw RangeError("unsupported field characteristic " + std::to_string(p) +
                       " (supported: 2, 3, 5)");
    }
  }

  int characteristic() const noexcept { return p_; }

  int reduce(long x) const noexcept {
    long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const noexcept { return (a + b) % p_; }
  int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
  int mul(int a, int b) const noexcept { return (a * b) % p_; }
  int neg(int a) const noexcept { return a ? p_ - a : 0; }
  int inv(int a) const {
    if (a % p_ == 0) throw InvariantError("division by zero in F_p");
    for (int b = 1; b < p_; ++b)
      if ((a * b) % p_ == 1) return b;
    return 0;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  int p_;
};

/// Dense matrix over F_p, row-major. Shapes may have zero rows or columns.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n, FieldSpec field) {
    FpMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (int x : data_)
      if (x) return false;
    return true;
  }

  FpMatrix transpose() const {
    FpMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  FpMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    FpMatrix b(nr, nc, field_);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    }
    const int p = a.field_.characteristic();
    FpMatrix out(a.rows_, b.cols_, a.field_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        int x = a(r, k);
        if (!x) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) = (out(r, c) + x * b(k, c)) % p;
      }
    }
    return out;
  }

  friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return a;
  }

  friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return a;
  }

  FpMatrix scaled(int k) const {
    FpMatrix m = *this;
    for (auto& x : m.data_) x = field_.mul(x, field_.reduce(k));
    return m;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  void check_same_shape(const FpMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw DimensionError("shape mismatch " + shape() + " vs " + b.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_{};
  std::vector<int> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

inline Echelon row_reduce(FpMatrix m) {
  const FieldSpec f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    int scale = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      int factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

inline std::size_t rank(const FpMatrix& m) { return row_reduce(m).rank(); }

/// Basis of {x : m x = 0} as the columns of a (cols x k) matrix: one column
/// per free variable, with a 1 in that variable's slot.
inline FpMatrix kernel(const FpMatrix& m) {
  const FieldSpec f = m.field();
  Echelon e = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(m.cols(), free_cols.size(), f);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = f.neg(e.reduced(r, free_cols[k]));
    }
  }
  return basis;
}

/// Quotient of F_p^d by the column span of `span`, presented on the standard
/// basis vectors at the non-pivot positions of the span's echelon form.
/// `projection` is the (d - rank) x d matrix of the quotient map.
struct Quotient {
  FpMatrix projection;
  std::vector<std::size_t> complement;  // positions of the complement basis
};

inline Quotient quotient_by_column_span(const FpMatrix& span) {
  const FieldSpec f = span.field();
  const std::size_t d = span.rows();
  Echelon e = row_reduce(span.transpose());
  std::vector<char> is_pivot(d, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> complement;
  std::vector<std::size_t> slot(d, 0);
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) {
      slot[c] = complement.size();
      complement.push_back(c);
    }
  }
  // Reducing e_t against the echelon rows leaves its coordinates on the
  // complement: e_t - sum_r [t is pivot r] row_r.
  FpMatrix proj(complement.size(), d, f);
  for (std::size_t t = 0; t < d; ++t) {
    if (!is_pivot[t]) {
      proj(slot[t], t) = 1;
      continue;
    }
    std::size_t r = 0;
    while (e.pivots[r] != t) ++r;
    for (std::size_t c : complement) proj(slot[c], t) = f.neg(e.reduced(r, c));
  }
  return Quotient{std::move(proj), std::move(complement)};
}

/// Solves basis * x = target for x, where basis has independent columns and
/// every column of target lies in its span.
inline FpMatrix solve_in_basis(const FpMatrix& basis, const FpMatrix& target) {
  if (basis.rows() != target.rows()) {
    throw DimensionError("solve_in_basis: row mismatch " + basis.shape() + " vs " + target.shape());
  }
  const FieldSpec f = basis.field();
  const std::size_t k = basis.cols();
  FpMatrix aug(basis.rows(), k + target.cols(), f);
  aug.set_block(0, 0, basis);
  aug.set_block(0, k, target);
  Echelon e = row_reduce(aug);
  if (e.rank() != k || (k > 0 && e.pivots.back() >= k) || (k == 0 && e.rank() > 0)) {
    throw InvariantError("solve_in_basis: target is not in the span of an independent basis");
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (e.pivots[r] != r) throw InvariantError("solve_in_basis: basis columns are dependent");
  }
  return e.reduced.block(0, k, k, target.cols());
}

/// Every subspace of F_p^d, each given by the columns of a (d x k) basis
/// matrix taken from its reduced row echelon form, so each subspace appears
/// once. Subspaces are produced in increasing dimension.
template <typename Visit>
void for_each_subspace(std::size_t d, FieldSpec f, Visit&& visit) {
  const int p = f.characteristic();
  for (std::size_t k = 0; k <= d; ++k) {
    // Choose pivot columns (increasing), then fill the free entries to the
    // right of each pivot that are not themselves pivots.
    std::vector<std::size_t> piv(k);
    std::vector<char> chosen(d, 0);
    auto recurse_pivots = [&](auto&& self, std::size_t idx, std::size_t start) -> void {
      if (idx == k) {
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = piv[r] + 1; c < d; ++c)
            if (!chosen[c]) free_slots.emplace_back(r, c);
        std::vector<int> vals(free_slots.size(), 0);
        while (true) {
          FpMatrix b(d, k, f);
          for (std::size_t r = 0; r < k; ++r) b(piv[r], r) = 1;
          for (std::size_t s = 0; s < free_slots.size(); ++s)
            b(free_slots[s].second, free_slots[s].first) = vals[s];
          visit(b);
          std::size_t s = 0;
          while (s < vals.size() && ++vals[s] == p) vals[s++] = 0;
          if (s == vals.size()) break;
        }
        return;
      }
      for (std::size_t c = start; c + (k - idx) <= d; ++c) {
        piv[idx] = c;
        chosen[c] = 1;
        self(self, idx + 1, c + 1);
        chosen[c] = 0;
      }
    };
    recurse_pivots(recurse_pivots, 0, 0);
  }
}

/// Number of subspaces of F_p^d (sum of Gaussian binomials).
inline unsigned long long count_subspaces(std::size_t d, int p) {
  // G(d, k) via the recurrence G(d,k) = G(d-1,k-1) + p^k G(d-1,k).
  std::vector<std::vector<unsigned long long>> g(d + 1, std::vector<unsigned long long>(d + 1, 0));
  for (std::size_t m = 0; m <= d; ++m) {
    g[m][0] = 1;
    unsigned long long pk = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      pk *= static_cast<unsigned long long>(p);
      g[m][k] = g[m - 1][k - 1] + (k <= m - 1 ? pk * g[m - 1][k] : 0);
    }
  }
  unsigned long long total = 0;
  for (std::size_t k = 0; k <= d; ++k) total += g[d][k];
  return total;
}

}  // namespace coxrep

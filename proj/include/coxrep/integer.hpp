#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxrep/errors.hpp"

namespace coxrep {

using Integer = boost::multiprecision::cpp_int;

/// An element of Z^n. Dimension vectors are the nonnegative ones.
using IntVector = std::vector<Integer>;

/// Square integer matrix, row-major. Weyl group actions keep w(e_j) in column j.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<Integer> entries;  // row-major n*n

  static IntMatrix identity(std::size_t n) {
    IntMatrix m{n, std::vector<Integer>(n * n)};
    for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = 1;
    return m;
  }

  Integer& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }

  IntVector column(std::size_t c) const {
    IntVector v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = at(r, c);
    return v;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != n) throw DimensionError("matrix/vector size mismatch");
    IntVector out(n);
    for (std::size_t r = 0; r < n; ++r) {
      Integer acc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (v[c] != 0 && at(r, c) != 0) acc += at(r, c) * v[c];
      }
      out[r] = std::move(acc);
    }
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n != b.n) throw DimensionError("matrix size mismatch");
    IntMatrix out{a.n, std::vector<Integer>(a.n * a.n)};
    for (std::size_t r = 0; r < a.n; ++r) {
      for (std::size_t k = 0; k < a.n; ++k) {
        const Integer& x = a.at(r, k);
        if (x == 0) continue;
        for (std::size_t c = 0; c < a.n; ++c) {
          if (b.at(k, c) != 0) out.at(r, c) += x * b.at(k, c);
        }
      }
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (a.n != b.n) return a.n <=> b.n;
    return std::lexicographical_compare_three_way(
        a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
        [](const Integer& x, const Integer& y) {
          return x < y ? std::strong_ordering::less
                       : (y < x ? std::strong_ordering::greater : std::strong_ordering::equal);
        });
  }
};

inline IntVector unit_vector(std::size_t n, std::size_t vertex) {
  IntVector v(n);
  v.at(vertex - 1) = 1;
  return v;
}

inline IntVector zero_vector(std::size_t n) { return IntVector(n); }

inline Integer height(const IntVector& v) {
  Integer h = 0;
  for (const auto& x : v) h += x;
  return h;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

inline bool is_nonpositive(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; });
}

/// Nonzero with all coordinates >= 0.
inline bool is_positive(const IntVector& v) { return !is_zero(v) && is_nonnegative(v); }

inline bool is_negative(const IntVector& v) { return !is_zero(v) && is_nonpositive(v); }

inline IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

inline IntVector operator+(IntVector a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline IntVector operator-(IntVector a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline IntVector operator*(const Integer& k, IntVector v) {
  for (auto& x : v) x *= k;
  return v;
}

inline IntVector to_int_vector(const std::vector<int>& v) { return IntVector(v.begin(), v.end()); }

inline IntVector to_int_vector(std::initializer_list<long long> v) {
  return IntVector(v.begin(), v.end());
}

/// Narrowing conversion for coordinates that index finite-dimensional spaces.
inline std::vector<int> to_small_vector(const IntVector& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min()) {
      throw RangeError("coordinate too large for a dimension vector");
    }
    out.push_back(static_cast<int>(x));
  }
  return out;
}

inline std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace coxrep

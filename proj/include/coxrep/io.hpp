#pragma once

// JSON encodings used by the command-line tool. Requires nlohmann/json.

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxrep/errors.hpp"
#include "coxrep/fp_matrix.hpp"
#include "coxrep/integer.hpp"
#include "coxrep/linrep.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/torsion.hpp"
#include "coxrep/weyl.hpp"

namespace coxrep::io {

using json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
inline json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(x);
  }
  return x.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline json to_json(std::vector<IntVector> roots) {
  std::sort(roots.begin(), roots.end());
  json out = json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

inline json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.n; ++c) row.push_back(to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const Word& w) {
  json out = json::array();
  for (auto i : w) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Quiver: {"n": 3, "arrows": [[1, 2], [3, 2]]}

inline json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source, a.target});
  return json{{"n", q.num_vertices()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) {
    throw ParseError("quiver needs a non-negative integer field \"n\"");
  }
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
        throw ParseError("each arrow must be a [source, target] pair, got " + a.dump());
      }
      long long s = a[0].get<long long>(), t = a[1].get<long long>();
      if (s < 1 || t < 1) throw RangeError("arrow endpoints must be positive, got " + a.dump());
      arrows.push_back({static_cast<Vertex>(s), static_cast<Vertex>(t)});
    }
  }
  return Quiver(j["n"].get<std::size_t>(), std::move(arrows));
}

// ---------------------------------------------------------------------------
// Representation: {"field": 2, "dims": [1,1,0], "mats": {"0": [[1]], "1": []}}
// Matrices are row-major; a matrix with no rows is written [] and its shape
// is taken from the dimension vector.

inline json to_json(const FpMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

inline FpMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, FieldSpec f) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  FpMatrix m(rows, cols, f);
  if (j.size() != rows && !(j.empty() && (rows == 0 || cols == 0))) {
    throw DimensionError("matrix has " + std::to_string(j.size()) + " rows, expected " +
                         std::to_string(rows));
  }
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw DimensionError("matrix row " + std::to_string(r) + " should have " +
                           std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) throw ParseError("matrix entries must be integers");
      m(r, c) = f.reduce(row[c].get<long>());
    }
  }
  return m;
}

inline json to_json(const Representation& v) {
  json mats = json::object();
  for (std::size_t a = 0; a < v.mats().size(); ++a) mats[std::to_string(a)] = to_json(v.mat(a));
  return json{{"field", v.field().characteristic()}, {"dims", v.dims()}, {"mats", mats}};
}

/// `field_override` replaces the file's field when set (the --field flag).
inline Representation representation_from_json(const json& j, const Quiver& q,
                                                std::optional<int> field_override = std::nullopt) {
  if (!j.is_object()) throw ParseError("representation must be a JSON object");
  int p = field_override.value_or(j.value("field", 2));
  FieldSpec f(p);
  if (!j.contains("dims") || !j["dims"].is_array()) throw ParseError("representation needs \"dims\"");
  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer()) throw ParseError("dims must be integers");
    dims.push_back(d.get<int>());
  }
  if (dims.size() != q.num_vertices()) {
    throw DimensionError("dims has " + std::to_string(dims.size()) + " entries for " +
                         std::to_string(q.num_vertices()) + " vertices");
  }
  for (int d : dims)
    if (d < 0) throw DimensionError("negative vertex dimension");
  const json mats = j.value("mats", json::object());
  if (!mats.is_object()) throw ParseError("\"mats\" must be an object keyed by arrow id");
  for (const auto& [key, _] : mats.items()) {
    std::size_t id = 0;
    try {
      std::size_t pos = 0;
      id = std::stoul(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("bad arrow id \"" + key + "\"");
    }
    if (id >= q.num_arrows()) throw RangeError("arrow id " + key + " out of range");
  }
  std::vector<FpMatrix> out;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    std::size_t rows = dims[arr.target - 1], cols = dims[arr.source - 1];
    auto key = std::to_string(a);
    if (mats.contains(key)) {
      out.push_back(matrix_from_json(mats[key], rows, cols, f));
    } else if (rows == 0 || cols == 0) {
      out.emplace_back(rows, cols, f);
    } else {
      throw DimensionError("missing matrix for arrow " + key);
    }
  }
  return Representation(q, f, std::move(dims), std::move(out));
}

// ---------------------------------------------------------------------------
// Elements, classes, reports

inline json to_json(const WeylElement& w) {
  return json{{"word", to_json(w.word())}, {"length", w.length()}, {"matrix", to_json(w.matrix())}};
}

inline json to_json(const TorsionFreeClass& f) {
  return json{{"quiver", to_json(f.quiver())}, {"roots", to_json(f.roots())}};
}

inline TorsionFreeClass class_from_json(const json& j, const Quiver& q, FieldSpec f) {
  const json* roots = &j;
  if (j.is_object()) {
    if (!j.contains("roots")) throw ParseError("class needs \"roots\"");
    if (j.contains("quiver") && !(quiver_from_json(j["quiver"]) == q)) {
      throw MismatchError("class was written for a different quiver");
    }
    roots = &j["roots"];
  }
  if (!roots->is_array()) throw ParseError("\"roots\" must be an array of integer arrays");
  std::vector<IntVector> rs;
  for (const auto& r : *roots) {
    rs.push_back(vector_from_json(r));
    check_length(q, rs.back());
  }
  return TorsionFreeClass(q, f, std::move(rs));
}

inline json to_json(const BijectionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"word", to_json(row.word)}, {"roots", to_json(row.roots)}});
  return json{{"sortable_count", r.sortable_count},
              {"tfc_count", r.tfc_count},
              {"counts_equal", r.counts_equal},
              {"injective", r.injective},
              {"lands_in_tfc", r.lands_in_tfc},
              {"round_trip", r.round_trip},
              {"inverse_round_trip", r.inverse_round_trip},
              {"pass", r.pass},
              {"rows", rows},
              {"gaps", r.gaps}};
}

inline json to_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& [root, mult] : d) out.push_back({{"root", to_json(root)}, {"multiplicity", mult}});
  return out;
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace coxrep::io

// Copyright 2026 Lineup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lineup::geometry {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline IntVector int_vector(std::initializer_list<long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline IntVector int_vector(const std::vector<int>& xs) {
  IntVector v;
  v.reserve(xs.size());
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

/// Divides by the (positive) gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return v;
  }
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

/// Primitive, with the first nonzero entry positive.
inline IntVector canonicalize(IntVector v) {
  v = primitive(std::move(v));
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

/// Smallest positive multiple of a rational vector that is integral, made primitive.
inline IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(std::move(out));
}

inline RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

/// Rank of a list of integer vectors (fraction-free elimination).
inline std::size_t rank(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  std::size_t m = rows.front().size(), r = 0;
  for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      Integer f = rows[i][col], p = rows[r][col];
      for (std::size_t j = col; j < m; ++j) rows[i][j] = p * rows[i][j] - f * rows[r][j];
      rows[i] = primitive(std::move(rows[i]));
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<RatVector>& rows) {
  std::vector<IntVector> ints;
  ints.reserve(rows.size());
  for (const auto& v : rows) ints.push_back(clear_denominators(v));
  return rank(std::move(ints));
}

/// Dimension of the affine hull; -1 for an empty list.
inline int affine_rank(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(diffs));
}

/// Reduced echelon basis of span(vectors). Pivots are searched in `pivot_cols`
/// order; every basis vector is primitive with a positive pivot entry.
struct EchelonBasis {
  std::vector<IntVector> vectors;
  std::vector<std::size_t> pivots;

  /// Eliminates the pivot columns from v, keeping v's positive multiple class.
  IntVector reduce(IntVector v) const {
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      std::size_t c = pivots[k];
      if (sgn(v[c]) == 0) continue;
      Integer f = v[c];
      const Integer& p = vectors[k][c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = p * v[j] - f * vectors[k][j];
    }
    return primitive(std::move(v));
  }
};

inline EchelonBasis echelon_basis(std::vector<IntVector> vs, const std::vector<std::size_t>& pivot_cols) {
  std::vector<bool> used(vs.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;  // (row, column)
  for (std::size_t c : pivot_cols) {
    std::size_t piv = vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (!used[i] && sgn(vs[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == vs.size()) continue;
    used[piv] = true;
    if (sgn(vs[piv][c]) < 0)
      for (auto& x : vs[piv]) x = -x;
    vs[piv] = primitive(std::move(vs[piv]));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == piv || sgn(vs[i][c]) == 0) continue;
      Integer f = vs[i][c];
      const Integer p = vs[piv][c];
      for (std::size_t j = 0; j < vs[i].size(); ++j) vs[i][j] = p * vs[i][j] - f * vs[piv][j];
      vs[i] = primitive(std::move(vs[i]));
    }
    chosen.emplace_back(piv, c);
  }
  EchelonBasis b;
  for (auto [row, col] : chosen) {
    b.vectors.push_back(vs[row]);
    b.pivots.push_back(col);
  }
  return b;
}

inline std::vector<std::size_t> right_to_left(std::size_t m) {
  std::vector<std::size_t> cols(m);
  for (std::size_t i = 0; i < m; ++i) cols[i] = m - 1 - i;
  return cols;
}

/// {y : <n_i, y> >= 0 for all rows n_i}.
struct ConeH {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> rows;
};

/// cone(rays) + span(lineality).
struct ConeV {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;

  bool operator==(const ConeV&) const = default;
};

inline bool contains(const ConeH& cone, const IntVector& y) {
  for (const auto& row : cone.rows)
    if (sgn(dot(row, y)) < 0) return false;
  return true;
}

inline bool contains(const ConeH& cone, const RatVector& y) {
  for (const auto& row : cone.rows)
    if (sgn(dot(row, y)) < 0) return false;
  return true;
}

namespace detail {

class Bits {
 public:
  void resize(std::size_t nbits) { w_.resize((nbits + 63) / 64, 0); }
  void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  void set_all(std::size_t nbits) {
    resize(nbits);
    for (std::size_t i = 0; i < nbits; ++i) set(i);
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  bool superset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

}  // namespace detail

/// Incremental double description of {y : <a, y> >= 0 for every added row a}.
/// Copyable, so a child cone can be derived from a parent by adding rows.
class DoubleDescription {
 public:
  explicit DoubleDescription(std::size_t m) : m_(m) {
    for (std::size_t i = 0; i < m; ++i) {
      IntVector e(m, 0);
      e[i] = 1;
      lineality_.push_back(std::move(e));
    }
  }

  std::size_t ambient_dim() const { return m_; }
  const std::vector<IntVector>& rows() const { return rows_; }
  std::size_t num_rays() const { return rays_.size(); }
  std::size_t dimension() const { return lineality_.size() + quotient_dim_; }
  bool is_full_dimensional() const { return dimension() == m_; }

  /// Adds rows, most zeros first.
  void add_rows(std::vector<IntVector> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const IntVector& a, const IntVector& b) {
      return zeros(a) > zeros(b);
    });
    for (const auto& r : rows) add_row(r);
  }

  void add_row(const IntVector& a) {
    if (a.size() != m_) throw std::invalid_argument("row dimension mismatch");
    const std::size_t idx = rows_.size();
    rows_.push_back(a);
    for (auto& ray : rays_) ray.zeros.resize(idx + 1);

    std::size_t li = lineality_.size();
    Integer p;
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      p = dot(a, lineality_[i]);
      if (sgn(p) != 0) {
        li = i;
        break;
      }
    }
    if (li < lineality_.size()) {
      IntVector l = std::move(lineality_[li]);
      lineality_.erase(lineality_.begin() + static_cast<std::ptrdiff_t>(li));
      if (sgn(p) < 0) {
        p = -p;
        for (auto& x : l) x = -x;
      }
      for (auto& other : lineality_) project(other, a, l, p);
      for (auto& ray : rays_) {
        project(ray.vec, a, l, p);
        ray.zeros.set(idx);
      }
      Ray nr{primitive(std::move(l)), {}};
      nr.zeros.set_all(idx);
      nr.zeros.resize(idx + 1);
      rays_.push_back(std::move(nr));
      ++quotient_dim_;
      return;
    }

    std::vector<Integer> val(rays_.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      val[i] = dot(a, rays_[i].vec);
      int s = sgn(val[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else rays_[i].zeros.set(idx);
    }
    if (neg.empty()) return;

    std::vector<Ray> next;
    const std::size_t need = m_ >= lineality_.size() + 2 ? m_ - lineality_.size() - 2 : 0;
    for (std::size_t ip : pos)
      for (std::size_t in : neg) {
        detail::Bits common = rays_[ip].zeros & rays_[in].zeros;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays_.size() && adjacent; ++k)
          if (k != ip && k != in && rays_[k].zeros.superset_of(common)) adjacent = false;
        if (!adjacent) continue;
        IntVector v(m_);
        const Integer np = val[ip], nn = -val[in];
        for (std::size_t j = 0; j < m_; ++j) v[j] = np * rays_[in].vec[j] + nn * rays_[ip].vec[j];
        common.set(idx);
        next.push_back(Ray{primitive(std::move(v)), std::move(common)});
      }
    std::vector<Ray> kept;
    kept.reserve(rays_.size() - neg.size() + next.size());
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (sgn(val[i]) >= 0) kept.push_back(std::move(rays_[i]));
    for (auto& r : next) kept.push_back(std::move(r));
    rays_ = std::move(kept);
    if (pos.empty()) {
      std::vector<IntVector> vs;
      for (const auto& r : rays_) vs.push_back(r.vec);
      quotient_dim_ = rank(std::move(vs));
    }
  }

  /// Canonical V-representation: reduced lineality basis (pivots rightmost),
  /// rays reduced modulo lineality, primitive, sorted.
  ConeV cone() const {
    ConeV out;
    out.ambient_dim = m_;
    EchelonBasis lb = echelon_basis(lineality_, right_to_left(m_));
    out.lineality = lb.vectors;
    std::sort(out.lineality.begin(), out.lineality.end());
    for (const auto& r : rays_) out.rays.push_back(lb.reduce(r.vec));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
  }

 private:
  struct Ray {
    IntVector vec;
    detail::Bits zeros;
  };

  static std::size_t zeros(const IntVector& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; }));
  }

  // v <- p v - <a, v> l, so that <a, v> = 0 afterwards (p = <a, l> > 0).
  static void project(IntVector& v, const IntVector& a, const IntVector& l, const Integer& p) {
    Integer q = dot(a, v);
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = p * v[j] - q * l[j];
    v = primitive(std::move(v));
  }

  std::size_t m_;
  std::vector<IntVector> rows_;
  std::vector<IntVector> lineality_;
  std::vector<Ray> rays_;
  std::size_t quotient_dim_ = 0;
};

inline ConeV dd_h_to_v(const ConeH& cone) {
  DoubleDescription dd(cone.ambient_dim);
  dd.add_rows(cone.rows);
  return dd.cone();
}

inline std::size_t cone_dim(const ConeH& cone) {
  ConeV v = dd_h_to_v(cone);
  std::vector<IntVector> all = v.rays;
  all.insert(all.end(), v.lineality.begin(), v.lineality.end());
  return rank(std::move(all));
}

/// A point with every row >= 0 and every flagged row > 0, or nothing.
inline std::optional<IntVector> strict_interior_point(const ConeH& cone, const std::vector<bool>& strict) {
  if (strict.size() != cone.rows.size()) throw std::invalid_argument("strict flags must match rows");
  ConeV v = dd_h_to_v(cone);
  IntVector y(cone.ambient_dim, 0);
  for (const auto& r : v.rays)
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += r[j];
  for (std::size_t i = 0; i < cone.rows.size(); ++i)
    if (strict[i] && sgn(dot(cone.rows[i], y)) <= 0) return std::nullopt;
  return primitive(std::move(y));
}

/// <normal, x> <= offset (facets) or <normal, x> = offset (equations).
struct AffineRow {
  IntVector normal;
  Integer offset;

  bool operator==(const AffineRow&) const = default;
  bool operator<(const AffineRow& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

struct PolytopeH {
  std::vector<AffineRow> facets;
  std::vector<AffineRow> equations;
};

/// Facets and affine-hull equations of conv(points). Facets are reduced modulo
/// the equations (pivots on the rightmost coordinates) and primitive.
inline PolytopeH facets_from_vertices(const std::vector<RatVector>& points) {
  if (points.empty()) throw std::invalid_argument("facets_from_vertices: no points");
  const std::size_t m = points.front().size();
  DoubleDescription dd(m + 1);
  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != m) throw std::invalid_argument("facets_from_vertices: dimension mismatch");
    RatVector h = p;
    h.push_back(1);
    rows.push_back(clear_denominators(h));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (const auto& r : rows) dd.add_row(r);
  ConeV dual = dd.cone();

  EchelonBasis eq = echelon_basis(dual.lineality, right_to_left(m));
  PolytopeH out;
  for (const auto& z : eq.vectors) {
    IntVector n(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
    IntVector all = n;
    all.push_back(-z[m]);
    all = canonicalize(std::move(all));
    out.equations.push_back({IntVector(all.begin(), all.end() - 1), all.back()});
  }
  for (const auto& ray : dual.rays) {
    IntVector z = eq.reduce(ray);
    IntVector all(m + 1);
    for (std::size_t j = 0; j < m; ++j) all[j] = -z[j];
    all[m] = z[m];
    if (std::all_of(all.begin(), all.end() - 1, [](const Integer& x) { return sgn(x) == 0; })) continue;
    all = primitive(std::move(all));
    out.facets.push_back({IntVector(all.begin(), all.end() - 1), all.back()});
  }
  std::sort(out.facets.begin(), out.facets.end());
  out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
  std::sort(out.equations.begin(), out.equations.end());
  return out;
}

inline std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

inline std::string to_json(const ConeH& cone) {
  std::string s = "{\"ambient_dim\":" + std::to_string(cone.ambient_dim) + ",\"rows\":[";
  for (std::size_t i = 0; i < cone.rows.size(); ++i) s += (i ? "," : "") + to_string(cone.rows[i]);
  return s + "]}";
}

inline std::string to_json(const ConeV& cone) {
  std::string s = "{\"ambient_dim\":" + std::to_string(cone.ambient_dim) + ",\"rays\":[";
  for (std::size_t i = 0; i < cone.rays.size(); ++i) s += (i ? "," : "") + to_string(cone.rays[i]);
  s += "],\"lineality\":[";
  for (std::size_t i = 0; i < cone.lineality.size(); ++i) s += (i ? "," : "") + to_string(cone.lineality[i]);
  return s + "]}";
}

}  // namespace lineup::geometry

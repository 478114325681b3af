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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lineup/combinatorics.hpp"
#include "lineup/engine.hpp"
#include "lineup/exact_geometry.hpp"

namespace lineup::oracle {

inline constexpr std::size_t kMaxPoints = 20000;
inline constexpr int kMaxDim = 7;

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All distinct coordinate permutations of v.
inline std::vector<RatVector> permutations_of(RatVector v) {
  std::sort(v.begin(), v.end());
  std::vector<RatVector> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<IntVector> permutations_of(IntVector v) {
  std::sort(v.begin(), v.end());
  std::vector<IntVector> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Sym_d images of all fundamental occupation vectors at w, deduplicated and sorted.
inline std::vector<RatVector> symmetrized_vertices(const Params& p, const RatVector& w,
                                                   std::size_t limit = kMaxPoints) {
  p.validate();
  validate_weights(w, true);
  if (static_cast<int>(w.size()) != p.r) throw std::invalid_argument("weight length must equal r");
  std::set<RatVector> pts;
  for (const auto& l : enumerate_lineups(p)) {
    for (auto& x : permutations_of(occupation_vector(l).evaluate(w))) {
      pts.insert(std::move(x));
      if (pts.size() > limit) throw GuardExceeded("more than " + std::to_string(limit) + " symmetrized vertices");
    }
  }
  return {pts.begin(), pts.end()};
}

/// Occupation vectors of every ordered r-tuple of distinct configurations.
/// Independent of the lineup tree; only for very small instances.
inline std::vector<RatVector> ordered_tuple_vectors(const Params& p, const RatVector& w,
                                                    std::size_t limit = 200000) {
  p.validate();
  validate_weights(w, true);
  std::vector<Configuration> all = all_configurations(p);
  std::set<RatVector> pts;
  std::vector<std::size_t> pick;
  std::vector<bool> used(all.size(), false);
  std::size_t visited = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(pick.size()) == p.r) {
      if (++visited > limit) throw GuardExceeded("too many ordered tuples");
      RatVector x(p.d, 0);
      for (int j = 0; j < p.r; ++j)
        for (int i = 0; i < p.d; ++i) x[i] += all[pick[j]][i] * w[j];
      pts.insert(std::move(x));
      return;
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      pick.push_back(k);
      self(self);
      pick.pop_back();
      used[k] = false;
    }
  };
  rec(rec);
  return {pts.begin(), pts.end()};
}

/// Facets of the convex hull of the symmetrized vertices, by generic facet enumeration.
inline geometry::PolytopeH brute_force_h_rep(const Params& p, const RatVector& w) {
  if (p.d > kMaxDim) throw GuardExceeded("brute force limited to d <= " + std::to_string(kMaxDim));
  return geometry::facets_from_vertices(symmetrized_vertices(p, w));
}

struct CompareReport {
  bool equal = false;
  bool equations_equal = false;
  std::size_t engine_facets = 0;
  std::size_t oracle_facets = 0;
  std::vector<IntVector> engine_only;  // canonical (normal..., offset)
  std::vector<IntVector> oracle_only;
};

namespace detail {

inline IntVector affine_vector(const IntVector& n, const Rational& b) {
  RatVector v = geometry::to_rational(n);
  v.push_back(b);
  return geometry::clear_denominators(v);
}

}  // namespace detail

/// Expands the engine's inequalities over Sym_d at w and compares with the
/// oracle's facet list, both reduced modulo the oracle's affine hull.
inline CompareReport compare_h_reps(const HRepresentation& engine, const geometry::PolytopeH& oracle,
                                    const RatVector& w) {
  const Params& p = engine.params;
  const std::size_t m = static_cast<std::size_t>(p.d);
  CompareReport rep;

  std::vector<IntVector> engine_eq;
  if (p.num_configurations() == 1) {
    Configuration c = Configuration::minimum(p);
    for (int i = 0; i < p.d; ++i) {
      IntVector e(m, 0);
      e[i] = 1;
      engine_eq.push_back(detail::affine_vector(e, Rational(c[i])));
    }
  } else {
    engine_eq.push_back(detail::affine_vector(f_vector(p.d, p.d), Rational(p.N)));
  }
  std::vector<IntVector> oracle_eq;
  for (const auto& e : oracle.equations) oracle_eq.push_back(detail::affine_vector(e.normal, Rational(e.offset)));
  auto basis_of = [&](const std::vector<IntVector>& vs) {
    return geometry::echelon_basis(vs, geometry::right_to_left(m));
  };
  geometry::EchelonBasis eb = basis_of(engine_eq), ob = basis_of(oracle_eq);
  auto sorted_vectors = [](std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  rep.equations_equal = sorted_vectors(eb.vectors) == sorted_vectors(ob.vectors);

  std::set<IntVector> lhs_set, rhs_set;
  for (const auto& e : engine.inequalities) {
    Rational b = e.rhs(w);
    for (const auto& y : permutations_of(e.lhs)) lhs_set.insert(ob.reduce(detail::affine_vector(y, b)));
  }
  for (const auto& f : oracle.facets) rhs_set.insert(ob.reduce(detail::affine_vector(f.normal, Rational(f.offset))));
  rep.engine_facets = lhs_set.size();
  rep.oracle_facets = rhs_set.size();
  std::set_difference(lhs_set.begin(), lhs_set.end(), rhs_set.begin(), rhs_set.end(),
                      std::back_inserter(rep.engine_only));
  std::set_difference(rhs_set.begin(), rhs_set.end(), lhs_set.begin(), lhs_set.end(),
                      std::back_inserter(rep.oracle_only));
  rep.equal = rep.equations_equal && rep.engine_only.empty() && rep.oracle_only.empty();
  return rep;
}

struct ThresholdResult {
  bool threshold = false;
  std::optional<IntVector> witness;
  std::optional<RatVector> common_point;
  std::string method;
};

inline bool separates(const IntVector& y, const std::vector<Configuration>& in, const std::vector<Configuration>& out) {
  if (in.empty() || out.empty()) return true;
  auto val = [&](const Configuration& c) { return geometry::dot(y, chi(c)); };
  Integer lo = val(in.front()), hi = val(out.front());
  for (const auto& c : in) lo = std::min(lo, val(c));
  for (const auto& c : out) hi = std::max(hi, val(c));
  return lo > hi;
}

/// A point of conv(A) and conv(B) when they intersect.
inline std::optional<RatVector> common_point(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  const std::size_t m = a.front().size();
  geometry::PolytopeH ha = geometry::facets_from_vertices(a), hb = geometry::facets_from_vertices(b);
  geometry::DoubleDescription dd(m + 1);
  IntVector t(m + 1, 0);
  t[m] = 1;
  dd.add_row(t);
  std::vector<IntVector> rows;
  auto add = [&](const geometry::AffineRow& f, int sign) {
    IntVector row(m + 1);
    for (std::size_t j = 0; j < m; ++j) row[j] = -sign * f.normal[j];
    row[m] = sign * f.offset;
    rows.push_back(std::move(row));
  };
  for (const auto* h : {&ha, &hb}) {
    for (const auto& f : h->facets) add(f, 1);
    for (const auto& e : h->equations) {
      add(e, 1);
      add(e, -1);
    }
  }
  dd.add_rows(rows);
  geometry::ConeV v = dd.cone();
  std::vector<RatVector> verts;
  for (const auto& ray : v.rays) {
    if (sgn(ray[m]) <= 0) continue;
    RatVector x(m);
    for (std::size_t j = 0; j < m; ++j) {
      x[j] = Rational(ray[j], ray[m]);
      x[j].canonicalize();
    }
    verts.push_back(std::move(x));
  }
  if (verts.empty()) return std::nullopt;
  RatVector bary(m, 0);
  for (const auto& x : verts)
    for (std::size_t j = 0; j < m; ++j) bary[j] += x[j];
  for (auto& x : bary) x /= static_cast<long>(verts.size());
  return bary;
}

/// Whether an ideal is strictly separable from its complement by a linear
/// functional. The search first looks inside the closed cone of the ideal's
/// insertion chain, then in the fundamental chamber, then anywhere; failure is
/// certified by a point common to both convex hulls.
inline ThresholdResult is_threshold(const GaleIdeal& ideal) {
  const Params& p = ideal.params();
  const std::size_t m = static_cast<std::size_t>(p.d);
  std::vector<Configuration> in = ideal.insertion_order(), out;
  for (const auto& c : all_configurations(p))
    if (!ideal.contains(c)) out.push_back(c);
  if (in.empty() || out.empty()) throw std::invalid_argument("is_threshold: ideal must be proper and nonempty");
  std::sort(in.begin(), in.end());

  std::vector<Configuration> tops = ideal.maximal_elements(), bottoms;
  for (const auto& c : out) {
    auto lc = lower_covers(c, p.statistics);
    if (std::all_of(lc.begin(), lc.end(), [&](const Configuration& x) { return ideal.contains(x); }))
      bottoms.push_back(c);
  }
  std::vector<IntVector> strict_rows;
  for (const auto& s : tops)
    for (const auto& t : bottoms) {
      IntVector row(m);
      for (std::size_t i = 0; i < m; ++i) row[i] = s[static_cast<int>(i)] - t[static_cast<int>(i)];
      strict_rows.push_back(std::move(row));
    }

  ThresholdResult res;
  auto attempt = [&](geometry::ConeH cone, const char* method) {
    std::vector<bool> flags(cone.rows.size(), false);
    for (const auto& r : strict_rows) {
      cone.rows.push_back(r);
      flags.push_back(true);
    }
    auto y = geometry::strict_interior_point(cone, flags);
    if (y && separates(*y, in, out)) {
      res.threshold = true;
      res.witness = std::move(y);
      res.method = method;
      return true;
    }
    return false;
  };
  if (attempt(chain_cone(p, ideal.insertion_order()).cone, "chain")) return res;
  if (attempt(fundamental_chamber(p.d), "chamber")) return res;

  // General separator (y, t): <y, chi(S)> > t > <y, chi(T)>.
  geometry::ConeH general;
  general.ambient_dim = m + 1;
  for (const auto& s : in) {
    IntVector row = chi(s);
    row.emplace_back(-1);
    general.rows.push_back(std::move(row));
  }
  for (const auto& t : out) {
    IntVector row = chi(t);
    for (auto& x : row) x = -x;
    row.emplace_back(1);
    general.rows.push_back(std::move(row));
  }
  auto yt = geometry::strict_interior_point(general, std::vector<bool>(general.rows.size(), true));
  if (yt) {
    res.threshold = true;
    res.witness = IntVector(yt->begin(), yt->end() - 1);
    res.method = "general";
    return res;
  }

  std::vector<RatVector> a, b;
  for (const auto& c : in) a.push_back(geometry::to_rational(chi(c)));
  for (const auto& c : out) b.push_back(geometry::to_rational(chi(c)));
  res.common_point = common_point(a, b);
  res.method = "hull intersection";
  if (!res.common_point) throw std::logic_error("is_threshold: no separator and no common point");
  return res;
}

/// Whether x lies in conv(points).
inline bool in_hull(const RatVector& x, const std::vector<RatVector>& points) {
  geometry::PolytopeH h = geometry::facets_from_vertices(points);
  for (const auto& e : h.equations)
    if (geometry::dot(e.normal, x) != Rational(e.offset)) return false;
  for (const auto& f : h.facets)
    if (geometry::dot(f.normal, x) > Rational(f.offset)) return false;
  return true;
}

}  // namespace lineup::oracle

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
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lineup/combinatorics.hpp"
#include "lineup/exact_geometry.hpp"
#include "lineup/parallel.hpp"

namespace lineup {

using geometry::Integer;
using geometry::IntVector;
using geometry::Rational;
using geometry::RatVector;

inline IntVector chi(const Configuration& c) { return geometry::int_vector(c.multiplicities()); }

/// f_k = e_1 + ... + e_k in R^d.
inline IntVector f_vector(int k, int d) {
  IntVector v(d, 0);
  for (int i = 0; i < k; ++i) v[i] = 1;
  return v;
}

/// w_j = 2(r + 1 - j) / (r(r + 1)).
inline RatVector default_weights(int r) {
  RatVector w(r);
  for (int j = 1; j <= r; ++j) {
    w[j - 1] = Rational(2 * (r + 1 - j), r * (r + 1));
    w[j - 1].canonicalize();
  }
  return w;
}

/// Throws unless w is positive, sums to one and is non-increasing (strictly if requested).
inline void validate_weights(const RatVector& w, bool strict) {
  if (w.empty()) throw std::invalid_argument("weights must be nonempty");
  Rational sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) <= 0) throw std::invalid_argument("weights must be positive");
    if (i > 0 && (strict ? w[i] >= w[i - 1] : w[i] > w[i - 1]))
      throw std::invalid_argument(strict ? "weights must be strictly decreasing" : "weights must be non-increasing");
    sum += w[i];
  }
  if (sum != 1) throw std::invalid_argument("weights must sum to 1");
}

/// d x r integer matrix M; the occupation vector is M w.
struct SymbolicOccupationVector {
  std::vector<std::vector<int>> M;

  int d() const { return static_cast<int>(M.size()); }
  int r() const { return M.empty() ? 0 : static_cast<int>(M.front().size()); }

  RatVector evaluate(const RatVector& w) const {
    if (static_cast<int>(w.size()) != r()) throw std::invalid_argument("weight length must equal r");
    RatVector x(M.size(), 0);
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        if (M[i][j] != 0) x[i] += M[i][j] * w[j];
    return x;
  }

  bool operator==(const SymbolicOccupationVector&) const = default;
  bool operator<(const SymbolicOccupationVector& o) const { return M < o.M; }
};

inline SymbolicOccupationVector occupation_vector(const std::vector<Configuration>& seq) {
  if (seq.empty()) throw std::invalid_argument("empty lineup");
  SymbolicOccupationVector o;
  int d = seq.front().d();
  o.M.assign(d, std::vector<int>(seq.size(), 0));
  for (std::size_t j = 0; j < seq.size(); ++j)
    for (int i = 0; i < d; ++i) o.M[i][j] = seq[j][i];
  return o;
}

struct Lineup {
  std::vector<Configuration> seq;
  geometry::ConeH cone;
  geometry::ConeV rays;
};

inline SymbolicOccupationVector occupation_vector(const Lineup& l) { return occupation_vector(l.seq); }

/// Rows y_i - y_{i+1} >= 0.
inline geometry::ConeH fundamental_chamber(int d) {
  geometry::ConeH c;
  c.ambient_dim = static_cast<std::size_t>(d);
  for (int i = 0; i + 1 < d; ++i) {
    IntVector row(d, 0);
    row[i] = 1;
    row[i + 1] = -1;
    c.rows.push_back(std::move(row));
  }
  return c;
}

namespace detail {

inline std::vector<IntVector> keystep_rows(const Configuration& s, const std::vector<Configuration>& runner_ups) {
  std::vector<IntVector> rows;
  for (const auto& t : runner_ups) {
    if (t == s) continue;
    IntVector row(s.d());
    for (int i = 0; i < s.d(); ++i) row[i] = s[i] - t[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline GaleIdeal ideal_of(const Params& p, const std::vector<Configuration>& seq) {
  GaleIdeal ideal(p);
  for (const auto& c : seq) ideal.insert(c);
  return ideal;
}

}  // namespace detail

/// Level-by-level construction of fundamental lineups with their cones. The
/// order at every level is lexicographic in the runner-up order, i.e. the
/// depth-first order of the lineup tree.
class LineupEnumerator {
 public:
  explicit LineupEnumerator(Params p, unsigned threads = thread_count()) : p_(p), threads_(threads) {
    p_.r = 1;
    p_.validate();
    geometry::ConeH phi = fundamental_chamber(p_.d);
    geometry::DoubleDescription dd(static_cast<std::size_t>(p_.d));
    dd.add_rows(phi.rows);
    Lineup first;
    first.seq = {Configuration::minimum(p_)};
    first.cone = phi;
    first.rays = dd.cone();
    lineups_.push_back(std::move(first));
    dd_.push_back(std::move(dd));
    level_ = 1;
  }

  int level() const { return level_; }
  const Params& params() const { return p_; }
  const std::vector<Lineup>& lineups() const { return lineups_; }

  void advance() {
    if (static_cast<std::uint64_t>(level_) >= p_.num_configurations())
      throw std::invalid_argument("no configurations left to extend lineups");
    std::vector<std::vector<std::pair<Lineup, geometry::DoubleDescription>>> kids(lineups_.size());
    parallel_for(
        lineups_.size(),
        [&](std::size_t i) {
          const Lineup& parent = lineups_[i];
          GaleIdeal ideal = detail::ideal_of(p_, parent.seq);
          std::vector<Configuration> ru = ideal.runner_ups();
          for (const auto& s : ru) {
            std::vector<IntVector> rows = detail::keystep_rows(s, ru);
            geometry::DoubleDescription dd = dd_[i];
            dd.add_rows(rows);
            if (!dd.is_full_dimensional()) continue;
            Lineup child;
            child.seq = parent.seq;
            child.seq.push_back(s);
            child.cone = parent.cone;
            child.cone.rows.insert(child.cone.rows.end(), rows.begin(), rows.end());
            child.rays = dd.cone();
            kids[i].emplace_back(std::move(child), std::move(dd));
          }
        },
        threads_);
    std::vector<Lineup> next;
    std::vector<geometry::DoubleDescription> next_dd;
    for (auto& group : kids)
      for (auto& [l, dd] : group) {
        next.push_back(std::move(l));
        next_dd.push_back(std::move(dd));
      }
    lineups_ = std::move(next);
    dd_ = std::move(next_dd);
    ++level_;
    p_.r = level_;
  }

 private:
  Params p_;
  unsigned threads_;
  int level_ = 0;
  std::vector<Lineup> lineups_;
  std::vector<geometry::DoubleDescription> dd_;
};

inline std::vector<Lineup> enumerate_lineups(const Params& p, unsigned threads = thread_count()) {
  p.validate();
  LineupEnumerator en(p, threads);
  while (en.level() < p.r) en.advance();
  return en.lineups();
}

struct ChainCone {
  geometry::ConeH cone;
  std::size_t dimension = 0;
};

/// The cone an arbitrary saturated chain would get from the keystep rule.
/// Throws if some prefix is not an ideal.
inline ChainCone chain_cone(const Params& p, const std::vector<Configuration>& seq) {
  ChainCone out;
  out.cone = fundamental_chamber(p.d);
  GaleIdeal ideal(p);
  for (const auto& s : seq) {
    std::vector<Configuration> ru = ideal.runner_ups();
    if (std::find(ru.begin(), ru.end(), s) == ru.end())
      throw std::invalid_argument(to_string(s) + " is not a runner-up of its prefix");
    auto rows = detail::keystep_rows(s, ru);
    out.cone.rows.insert(out.cone.rows.end(), rows.begin(), rows.end());
    ideal.insert(s);
  }
  out.dimension = geometry::cone_dim(out.cone);
  return out;
}

struct Composition {
  std::vector<int> parts;
  bool operator==(const Composition&) const = default;
};

/// Run lengths of equal consecutive entries of a non-increasing vector.
inline Composition composition_of(const IntVector& y) {
  Composition c;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i > 0 && y[i] > y[i - 1]) throw std::invalid_argument("composition_of: vector is not non-increasing");
    if (i > 0 && y[i] == y[i - 1]) ++c.parts.back();
    else c.parts.push_back(1);
  }
  return c;
}

inline bool is_non_increasing(const IntVector& y) {
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] > y[i - 1]) return false;
  return true;
}

/// Indices of the lineups whose closed cone contains y.
inline std::vector<std::size_t> maximizers(const IntVector& y, const std::vector<Lineup>& lineups) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lineups.size(); ++i)
    if (geometry::contains(lineups[i].cone, y)) out.push_back(i);
  return out;
}

/// Dimension of the face of the Sym_d-symmetrized polytope maximized by y,
/// given the occupation vectors of the maximizing lineups.
inline int face_dimension_of(const IntVector& y, const std::vector<const SymbolicOccupationVector*>& vy,
                             const RatVector& w) {
  Composition c = composition_of(y);
  if (c.parts.size() < 2) throw std::invalid_argument("face_dimension: y is a multiple of (1,...,1)");
  if (vy.empty()) throw std::invalid_argument("face_dimension: no maximizing lineup");
  std::vector<RatVector> pts;
  for (const auto* o : vy) {
    RatVector x = o->evaluate(w);
    RatVector proj(c.parts.size(), 0);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < c.parts.size(); ++b)
      for (int k = 0; k < c.parts[b]; ++k) proj[b] += x[pos++];
    pts.push_back(std::move(proj));
  }
  int dim = geometry::affine_rank(pts);
  std::size_t start = 0;
  for (int part : c.parts) {
    bool fixed = std::all_of(vy.begin(), vy.end(), [&](const SymbolicOccupationVector* o) {
      for (int k = 1; k < part; ++k)
        if (o->M[start + k] != o->M[start]) return false;
      return true;
    });
    if (!fixed) dim += part - 1;
    start += static_cast<std::size_t>(part);
  }
  return dim;
}

inline int face_dimension(const IntVector& y, const Params& p, const std::vector<Lineup>& lineups) {
  if (static_cast<int>(y.size()) != p.d) throw std::invalid_argument("face_dimension: wrong length");
  if (!is_non_increasing(y)) throw std::invalid_argument("face_dimension: y is not non-increasing");
  std::vector<SymbolicOccupationVector> os;
  for (std::size_t i : maximizers(y, lineups)) os.push_back(occupation_vector(lineups[i]));
  std::vector<const SymbolicOccupationVector*> ptrs;
  for (const auto& o : os) ptrs.push_back(&o);
  int r = lineups.empty() ? p.r : static_cast<int>(lineups.front().seq.size());
  return face_dimension_of(y, ptrs, default_weights(r));
}

/// The r largest values of <y, chi(S)>, found by best-first search upward from
/// the Gale minimum (valid because values decrease along covers for y in the
/// fundamental chamber).
inline IntVector rhs_of(const IntVector& y, const Params& p) {
  p.validate();
  if (static_cast<int>(y.size()) != p.d) throw std::invalid_argument("rhs_of: wrong length");
  if (!is_non_increasing(y)) throw std::invalid_argument("rhs_of: y is not non-increasing");
  auto value = [&](const Configuration& c) {
    Integer v = 0;
    for (int i = 0; i < p.d; ++i)
      if (c[i] != 0) v += y[i] * c[i];
    return v;
  };
  struct Item {
    Integer v;
    Configuration c;
  };
  auto worse = [](const Item& a, const Item& b) {
    if (a.v != b.v) return a.v < b.v;
    return b.c < a.c;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> queue(worse);
  std::unordered_set<Configuration, ConfigurationHash> seen;
  Configuration start = Configuration::minimum(p);
  seen.insert(start);
  queue.push({value(start), start});
  IntVector out;
  while (static_cast<int>(out.size()) < p.r) {
    Item top = queue.top();
    queue.pop();
    out.push_back(top.v);
    for (const auto& u : upper_covers(top.c, p.statistics))
      if (seen.insert(u).second) queue.push({value(u), u});
  }
  return out;
}

/// RHS(N) = a N + b + <c, w>.
struct AffineRhs {
  Integer a;
  Integer b;
  IntVector c;
  bool operator==(const AffineRhs&) const = default;
};

struct ExclusionInequality {
  IntVector lhs;
  IntVector rhs_w;
  AffineRhs rhs_affine;
  int first_r = 0;

  Rational rhs(const RatVector& w) const {
    if (w.size() != rhs_w.size()) throw std::invalid_argument("weight length must equal r");
    Rational v = 0;
    for (std::size_t j = 0; j < w.size(); ++j) v += rhs_w[j] * w[j];
    return v;
  }

  bool operator==(const ExclusionInequality&) const = default;
};

inline bool canonical_order(const ExclusionInequality& a, const ExclusionInequality& b) {
  if (a.first_r != b.first_r) return a.first_r < b.first_r;
  return a.lhs < b.lhs;
}

/// Vertices (symbolic), facet inequalities and the equation sum(x) = N.
struct HRepresentation {
  Params params;
  std::vector<std::vector<Configuration>> lineups;
  std::vector<SymbolicOccupationVector> vertices;
  std::vector<ExclusionInequality> inequalities;
  std::vector<std::size_t> lineup_counts;  // entry k is the number of lineups of length k + 1

  std::size_t new_inequalities(int r) const {
    return static_cast<std::size_t>(std::count_if(inequalities.begin(), inequalities.end(),
                                                  [r](const ExclusionInequality& e) { return e.first_r == r; }));
  }
};

inline AffineRhs affine_rhs(const IntVector& lhs, const IntVector& rhs_w, const Params& p) {
  AffineRhs out;
  bool is_f1 = p.statistics == Statistics::fermion && lhs == f_vector(1, p.d);
  out.a = is_f1 ? Integer(0) : lhs.front();
  const Integer& last = rhs_w.back();
  out.b = last - out.a * p.N;
  for (const auto& s : rhs_w) out.c.push_back(s - last);
  return out;
}

namespace detail {

// Closed-cone membership on machine integers when everything is small.
class SmallCones {
 public:
  explicit SmallCones(const std::vector<Lineup>& ls) {
    rows_.resize(ls.size());
    for (std::size_t i = 0; i < ls.size() && ok_; ++i)
      for (const auto& row : ls[i].cone.rows) {
        for (const auto& x : row) {
          if (!x.fits_slong_p() || abs(x) > kLimit) {
            ok_ = false;
            break;
          }
          rows_[i].push_back(x.get_si());
        }
      }
    if (!ls.empty()) d_ = ls.front().cone.ambient_dim;
  }

  bool ok() const { return ok_; }

  static bool convert(const IntVector& y, std::vector<std::int64_t>& out) {
    out.clear();
    for (const auto& x : y) {
      if (!x.fits_slong_p() || abs(x) > kLimit) return false;
      out.push_back(x.get_si());
    }
    return true;
  }

  bool contains(std::size_t i, const std::vector<std::int64_t>& y) const {
    const auto& r = rows_[i];
    for (std::size_t k = 0; k < r.size(); k += d_) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d_; ++j) s += r[k + j] * y[j];
      if (s < 0) return false;
    }
    return true;
  }

 private:
  static constexpr long kLimit = 1L << 24;
  std::vector<std::vector<std::int64_t>> rows_;
  std::size_t d_ = 0;
  bool ok_ = true;
};

inline bool is_facet_at_level(const IntVector& y, const std::vector<Lineup>& ls,
                              const std::vector<SymbolicOccupationVector>& os, const SmallCones& small,
                              const RatVector& w, int d) {
  std::vector<const SymbolicOccupationVector*> vy;
  std::vector<std::int64_t> ys;
  if (small.ok() && SmallCones::convert(y, ys)) {
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (small.contains(i, ys)) vy.push_back(&os[i]);
  } else {
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (geometry::contains(ls[i].cone, y)) vy.push_back(&os[i]);
  }
  return face_dimension_of(y, vy, w) == d - 2;
}

}  // namespace detail

/// Runs the lineup tree from length 1 to p.r; candidate rays are the rays of
/// all fundamental cones, kept when their face has dimension d - 2. Each
/// facet is stamped with the first length at which it passes.
inline HRepresentation generate_h_representation(const Params& p, unsigned threads = thread_count()) {
  p.validate();
  HRepresentation out;
  out.params = p;
  LineupEnumerator en(p, threads);
  std::map<IntVector, int> stamp;
  std::vector<IntVector> final_facets;
  const bool trivial = p.num_configurations() == 1;
  for (int level = 1; level <= p.r; ++level) {
    if (level > 1) en.advance();
    const auto& ls = en.lineups();
    out.lineup_counts.push_back(ls.size());
    if (trivial) continue;
    std::vector<SymbolicOccupationVector> os;
    for (const auto& l : ls) os.push_back(occupation_vector(l));
    std::set<IntVector> cand;
    for (const auto& l : ls) cand.insert(l.rays.rays.begin(), l.rays.rays.end());
    std::vector<IntVector> todo;
    for (const auto& y : cand)
      if (level == p.r || !stamp.count(y)) todo.push_back(y);
    detail::SmallCones small(ls);
    RatVector w = default_weights(level);
    std::vector<char> pass(todo.size(), 0);
    parallel_for(
        todo.size(), [&](std::size_t i) { pass[i] = detail::is_facet_at_level(todo[i], ls, os, small, w, p.d); },
        threads);
    for (std::size_t i = 0; i < todo.size(); ++i) {
      if (!pass[i]) continue;
      stamp.emplace(todo[i], level);
      if (level == p.r) final_facets.push_back(todo[i]);
    }
  }
  for (const auto& l : en.lineups()) {
    out.lineups.push_back(l.seq);
    out.vertices.push_back(occupation_vector(l));
  }
  for (const auto& y : final_facets) {
    ExclusionInequality e;
    e.lhs = y;
    e.rhs_w = rhs_of(y, p);
    e.rhs_affine = affine_rhs(y, e.rhs_w, p);
    e.first_r = stamp.at(y);
    out.inequalities.push_back(std::move(e));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(), canonical_order);
  return out;
}

/// Smallest parameters inside the stability range for a given r.
inline Params base_params(Statistics s, int r) {
  Params p;
  p.statistics = s;
  p.r = r;
  if (s == Statistics::fermion) {
    p.N = std::max(r - 1, 2);
    p.d = std::max(2 * r - 2, 4);
  } else {
    p.N = std::max(r - 1, 1);
    p.d = std::max(r, 3);
  }
  return p;
}

/// Whether (N, d) lies in the stability range of a system generated at base.
inline bool in_lift_range(const Params& base, int N, int d) {
  const int r = base.r, n0 = base.N, d0 = base.d;
  if (base.statistics == Statistics::fermion)
    return n0 >= std::max(r - 1, 2) && d0 - n0 >= std::max(r - 1, 2) && N >= n0 && d - N >= d0 - n0;
  return n0 >= std::max(r - 1, 1) && d0 >= std::max(r, 3) && N >= n0 && d >= d0;
}

/// Transports a system generated inside the stability range to (N, d).
inline HRepresentation stability_lift(const HRepresentation& base, int N, int d) {
  const Params& b = base.params;
  if (!in_lift_range(b, N, d))
    throw std::invalid_argument("stability_lift: target (N=" + std::to_string(N) + ", d=" + std::to_string(d) +
                                ") or base parameters outside the stability range");
  const bool fermion = b.statistics == Statistics::fermion;
  const int shift = N - b.N;
  HRepresentation out;
  out.params = b;
  out.params.N = N;
  out.params.d = d;
  out.lineup_counts = base.lineup_counts;

  auto lift_config = [&](const Configuration& c) {
    std::vector<int> m(d, 0);
    if (fermion) {
      for (int i = 0; i < shift; ++i) m[i] = 1;
      for (int i = 0; i < b.d; ++i) m[i + shift] = c[i];
    } else {
      for (int i = 0; i < b.d; ++i) m[i] = c[i];
      m[0] += shift;
    }
    return Configuration(std::move(m));
  };
  for (const auto& seq : base.lineups) {
    std::vector<Configuration> lifted;
    for (const auto& c : seq) lifted.push_back(lift_config(c));
    out.vertices.push_back(occupation_vector(lifted));
    out.lineups.push_back(std::move(lifted));
  }

  const IntVector f1 = f_vector(1, b.d), ftop = f_vector(b.d - 1, b.d);
  for (const auto& e : base.inequalities) {
    ExclusionInequality l = e;
    if (e.lhs == ftop) {
      l.lhs = f_vector(d - 1, d);
    } else if (fermion && e.lhs == f1) {
      l.lhs = f_vector(1, d);
    } else if (fermion) {
      // y_1 repeated N - N0 + 1 times, y_2..y_{d0-1}, then y_{d0} = 0 padded.
      l.lhs.assign(d, 0);
      int pos = 0;
      for (int k = 0; k <= shift; ++k) l.lhs[pos++] = e.lhs[0];
      for (int i = 1; i + 1 < b.d; ++i) l.lhs[pos++] = e.lhs[i];
    } else {
      l.lhs = e.lhs;
      l.lhs.resize(d, 0);
    }
    for (auto& s : l.rhs_w) s += e.rhs_affine.a * shift;
    out.inequalities.push_back(std::move(l));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(), canonical_order);
  return out;
}

struct MembershipResult {
  bool inside = true;
  std::vector<std::size_t> violated;
  std::vector<std::size_t> tight;
};

/// Exact test of a spectrum against every inequality at weights w.
inline MembershipResult check_membership(const HRepresentation& h, RatVector x, const RatVector& w) {
  if (static_cast<int>(x.size()) != h.params.d)
    throw std::invalid_argument("spectrum must have d = " + std::to_string(h.params.d) + " entries");
  Rational sum = 0;
  for (const auto& v : x) sum += v;
  if (sum != h.params.N)
    throw std::invalid_argument("spectrum violates the equation x_1 + ... + x_d = N (sum is " + sum.get_str() +
                                ", N = " + std::to_string(h.params.N) + ")");
  validate_weights(w, false);
  std::sort(x.begin(), x.end(), std::greater<>());
  MembershipResult res;
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    const auto& e = h.inequalities[i];
    Rational lhs = geometry::dot(e.lhs, x), rhs = e.rhs(w);
    if (lhs > rhs) res.violated.push_back(i);
    else if (lhs == rhs) res.tight.push_back(i);
  }
  res.inside = res.violated.empty();
  return res;
}

}  // namespace lineup

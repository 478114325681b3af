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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lineup/oracle.hpp"

using namespace lineup;
using geometry::int_vector;

namespace {

RatVector rat(std::initializer_list<std::pair<long, long>> xs) {
  RatVector v;
  for (auto [n, d] : xs) {
    Rational q(n, d);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

RatVector random_weights(std::mt19937& rng, int r) {
  std::uniform_int_distribution<int> dist(1, 60);
  std::set<int, std::greater<>> vals;
  while (static_cast<int>(vals.size()) < r) vals.insert(dist(rng));
  long total = 0;
  for (int v : vals) total += v;
  RatVector w;
  for (int v : vals) {
    Rational q(v, total);
    q.canonicalize();
    w.push_back(q);
  }
  return w;
}

std::vector<RatVector> images(const std::vector<Configuration>& cs) {
  std::vector<RatVector> out;
  for (const auto& c : cs) out.push_back(geometry::to_rational(chi(c)));
  return out;
}

std::vector<Configuration> complement(const GaleIdeal& ideal) {
  std::vector<Configuration> out;
  for (const auto& c : all_configurations(ideal.params()))
    if (!ideal.contains(c)) out.push_back(c);
  return out;
}

GaleIdeal ideal(Statistics s, int n, int d, std::initializer_list<const char*> gens) {
  Params p{s, n, d, 1};
  std::vector<Configuration> g;
  for (const char* x : gens) g.push_back(parse_configuration(x, p));
  return GaleIdeal::generated_by(p, g);
}

}  // namespace

TEST(SymmetrizedVertices, FortyEightPoints) {
  Params p{Statistics::fermion, 2, 4, 3};
  RatVector w = rat({{1, 2}, {1, 3}, {1, 6}});
  auto ls = enumerate_lineups(p);
  std::set<RatVector> fund;
  for (const auto& l : ls) fund.insert(occupation_vector(l).evaluate(w));
  EXPECT_EQ(fund, (std::set<RatVector>{{1, w[0], w[1], w[2]}, {w[0] + w[1], w[0] + w[2], w[1] + w[2], 0}}));
  EXPECT_EQ(oracle::symmetrized_vertices(p, w).size(), 48u);
  EXPECT_THROW(oracle::symmetrized_vertices(p, rat({{1, 2}, {1, 4}, {1, 4}})), std::invalid_argument);
}

TEST(SymmetrizedVertices, HypersimplexAtROne) {
  for (auto [n, d] : {std::pair{2, 4}, std::pair{3, 6}, std::pair{1, 5}}) {
    auto pts = oracle::symmetrized_vertices(Params{Statistics::fermion, n, d, 1}, {1});
    EXPECT_EQ(pts.size(), binomial(d, n));
    for (const auto& x : pts)
      for (const auto& v : x) EXPECT_TRUE(v == 0 || v == 1);
  }
}

TEST(SymmetrizedVertices, Guard) {
  EXPECT_THROW(oracle::symmetrized_vertices(Params{Statistics::fermion, 3, 6, 4}, default_weights(4), 10),
               oracle::GuardExceeded);
  EXPECT_THROW(oracle::brute_force_h_rep(Params{Statistics::fermion, 2, 8, 1}, {1}), oracle::GuardExceeded);
}

TEST(OrderedTuples, HullMatchesSymmetrizedLineups) {
  // Every ordered r-tuple gives a point of the polytope; the hull of all of them
  // must equal the hull of the symmetrized lineup vectors.
  std::mt19937 rng(3);
  for (const Params& p : {Params{Statistics::fermion, 2, 4, 2}, Params{Statistics::fermion, 2, 4, 3},
                          Params{Statistics::boson, 2, 3, 3}, Params{Statistics::fermion, 2, 5, 3}}) {
    RatVector w = random_weights(rng, p.r);
    auto a = geometry::facets_from_vertices(oracle::ordered_tuple_vectors(p, w));
    auto b = oracle::brute_force_h_rep(p, w);
    EXPECT_EQ(a.facets, b.facets);
    EXPECT_EQ(a.equations, b.equations);
  }
}

TEST(BruteForce, WorkedExamples) {
  RatVector w = rat({{12, 24}, {6, 24}, {4, 24}, {2, 24}});
  for (const Params& p : {Params{Statistics::fermion, 3, 6, 4}, Params{Statistics::boson, 3, 4, 4}}) {
    auto rep = oracle::compare_h_reps(generate_h_representation(p), oracle::brute_force_h_rep(p, w), w);
    EXPECT_TRUE(rep.equal);
    EXPECT_EQ(rep.engine_facets, rep.oracle_facets);
  }
  auto oct = oracle::brute_force_h_rep(Params{Statistics::fermion, 2, 4, 1}, {1});
  EXPECT_EQ(oct.facets.size(), 8u);
}

TEST(BruteForce, EquivalenceOnAcceptanceInstances) {
  struct Family {
    Statistics s;
    int n, d, max_r;
  };
  std::vector<Family> fams = {{Statistics::fermion, 2, 4, 4},
                              {Statistics::fermion, 2, 5, 5},
                              {Statistics::fermion, 3, 6, 4},
                              {Statistics::boson, 2, 3, 5},
                              {Statistics::boson, 3, 4, 4}};
  for (unsigned seed : {101u, 202u}) {
    std::mt19937 rng(seed);
    for (const auto& f : fams)
      for (int r = 1; r <= f.max_r; ++r) {
        Params p{f.s, f.n, f.d, r};
        RatVector w = random_weights(rng, r);
        auto rep = oracle::compare_h_reps(generate_h_representation(p), oracle::brute_force_h_rep(p, w), w);
        EXPECT_TRUE(rep.equal) << to_string(f.s) << " N=" << f.n << " d=" << f.d << " r=" << r << " seed=" << seed;
      }
  }
}

TEST(BruteForce, DetectsTamperedSystem) {
  Params p{Statistics::fermion, 3, 6, 4};
  RatVector w = default_weights(4);
  HRepresentation h = generate_h_representation(p);
  h.inequalities.pop_back();
  auto rep = oracle::compare_h_reps(h, oracle::brute_force_h_rep(p, w), w);
  EXPECT_FALSE(rep.equal);
  EXPECT_FALSE(rep.oracle_only.empty());
}

TEST(Threshold, KnownVerdicts) {
  struct Case {
    GaleIdeal ideal;
    bool threshold;
    std::size_t size;
    RatVector point;
  };
  Rational third(1, 3);
  std::vector<Case> cases;
  cases.push_back({ideal(Statistics::fermion, 3, 9, {"178", "239", "456"}), false, 36, RatVector(9, third)});
  cases.push_back({ideal(Statistics::boson, 3, 5, {"135", "234"}), false, 17,
                   RatVector{third, 2 * third, 1, 2 * third, third}});
  cases.push_back({ideal(Statistics::fermion, 3, 7, {"147", "246"}), true, 0, {}});
  cases.push_back({ideal(Statistics::boson, 3, 7, {"147", "166", "227", "444"}), true, 0, {}});
  cases.push_back({ideal(Statistics::fermion, 3, 9, {"159", "178", "239", "456"}), false, 38, RatVector(9, third)});
  for (const auto& c : cases) {
    auto res = oracle::is_threshold(c.ideal);
    EXPECT_EQ(res.threshold, c.threshold);
    auto in = c.ideal.insertion_order();
    auto out = complement(c.ideal);
    if (c.threshold) {
      ASSERT_TRUE(res.witness.has_value());
      EXPECT_TRUE(oracle::separates(*res.witness, in, out));
      continue;
    }
    EXPECT_EQ(c.ideal.size(), c.size);
    ASSERT_TRUE(res.common_point.has_value());
    EXPECT_TRUE(oracle::in_hull(*res.common_point, images(in)));
    EXPECT_TRUE(oracle::in_hull(*res.common_point, images(out)));
    EXPECT_TRUE(oracle::in_hull(c.point, images(in)));
    EXPECT_TRUE(oracle::in_hull(c.point, images(out)));
  }
}

TEST(Threshold, LineupPrefixesAreThreshold) {
  for (const Params& p : {Params{Statistics::fermion, 3, 6, 7}, Params{Statistics::boson, 3, 4, 6},
                          Params{Statistics::fermion, 2, 6, 8}}) {
    for (const auto& l : enumerate_lineups(p)) {
      GaleIdeal ideal(p);
      for (std::size_t k = 0; k < l.seq.size(); ++k) {
        ideal.insert(l.seq[k]);
        if (ideal.size() == p.num_configurations()) break;
        auto res = oracle::is_threshold(ideal);
        ASSERT_TRUE(res.threshold);
        EXPECT_EQ(res.method, "chain");
        ChainCone cc = chain_cone(p, std::vector<Configuration>(l.seq.begin(), l.seq.begin() + k + 1));
        EXPECT_TRUE(geometry::contains(cc.cone, *res.witness));
      }
      // Full-length witness sits in the lineup's own closed cone.
      if (static_cast<std::uint64_t>(p.r) < p.num_configurations()) {
        auto res = oracle::is_threshold(ideal);
        EXPECT_TRUE(geometry::contains(l.cone, *res.witness));
      }
    }
  }
}

TEST(Threshold, NonCoherentChainPrefixesAreThreshold) {
  Params f{Statistics::fermion, 2, 6, 1};
  Params b{Statistics::boson, 3, 3, 1};
  std::vector<std::pair<Params, std::vector<const char*>>> chains = {
      {f, {"12", "13", "14", "15", "23", "24", "25", "34", "16", "26"}},
      {b, {"111", "112", "122", "113", "123"}}};
  for (const auto& [p, names] : chains) {
    GaleIdeal ideal(p);
    std::vector<Configuration> seq;
    for (const char* n : names) {
      seq.push_back(parse_configuration(n, p));
      ideal.insert(seq.back());
      EXPECT_TRUE(oracle::is_threshold(ideal).threshold) << n;
    }
    EXPECT_LT(chain_cone(p, seq).dimension, static_cast<std::size_t>(p.d));
  }
}

TEST(Threshold, RejectsImproperIdeals) {
  Params p{Statistics::fermion, 2, 4, 1};
  EXPECT_THROW(oracle::is_threshold(GaleIdeal(p)), std::invalid_argument);
  GaleIdeal full(p);
  while (!full.runner_ups().empty()) full.insert(full.runner_ups().front());
  EXPECT_THROW(oracle::is_threshold(full), std::invalid_argument);
}

TEST(InHull, Basics) {
  std::vector<RatVector> square = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_TRUE(oracle::in_hull({Rational(1, 2), Rational(1, 2)}, square));
  EXPECT_FALSE(oracle::in_hull({2, 0}, square));
  std::vector<RatVector> seg = {{0, 0}, {2, 2}};
  EXPECT_TRUE(oracle::in_hull({1, 1}, seg));
  EXPECT_FALSE(oracle::in_hull({1, 0}, seg));
}

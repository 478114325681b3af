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

// Golden tables: reference inequality lists stored under tests/data.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "lineup/engine.hpp"

using namespace lineup;

namespace {

struct GoldenRow {
  int first_r = 0;
  IntVector lhs;
  std::vector<IntVector> tail;  // remaining '|' separated groups
};

IntVector ints(const std::string& s) {
  std::istringstream is(s);
  IntVector v;
  long x;
  while (is >> x) v.emplace_back(x);
  return v;
}

std::vector<GoldenRow> load(const std::string& name) {
  std::ifstream f(std::string(LINEUP_TEST_DATA) + "/" + name);
  EXPECT_TRUE(f.good()) << name;
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, '|')) parts.push_back(part);
    if (line.back() == '|') parts.emplace_back();
    GoldenRow r;
    r.first_r = std::stoi(parts.at(0));
    r.lhs = ints(parts.at(1));
    for (std::size_t i = 2; i < parts.size(); ++i) r.tail.push_back(ints(parts[i]));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<GoldenRow> sorted(std::vector<GoldenRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const GoldenRow& a, const GoldenRow& b) {
    if (a.first_r != b.first_r) return a.first_r < b.first_r;
    return a.lhs < b.lhs;
  });
  return rows;
}

// Compares a generated system against rows of the form first_r | lhs | a b | c_1..c_{first_r-1}.
void expect_affine_table(const HRepresentation& h, const std::vector<GoldenRow>& golden, int max_first_r) {
  std::vector<GoldenRow> want;
  for (const auto& g : golden)
    if (g.first_r <= max_first_r) want.push_back(g);
  want = sorted(std::move(want));
  ASSERT_EQ(h.inequalities.size(), want.size()) << "r=" << max_first_r;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& e = h.inequalities[i];
    const auto& g = want[i];
    SCOPED_TRACE("row " + std::to_string(i) + " " + geometry::to_string(g.lhs));
    EXPECT_EQ(e.first_r, g.first_r);
    EXPECT_EQ(e.lhs, g.lhs);
    ASSERT_EQ(g.tail.size(), 2u);
    ASSERT_EQ(g.tail[0].size(), 2u);
    EXPECT_EQ(e.rhs_affine.a, g.tail[0][0]);
    EXPECT_EQ(e.rhs_affine.b, g.tail[0][1]);
    ASSERT_EQ(g.tail[1].size(), static_cast<std::size_t>(g.first_r - 1));
    for (std::size_t j = 0; j < e.rhs_affine.c.size(); ++j) {
      Integer want_c = j < g.tail[1].size() ? g.tail[1][j] : Integer(0);
      EXPECT_EQ(e.rhs_affine.c[j], want_c) << "c_" << j + 1;
    }
  }
}

}  // namespace

TEST(Golden, HypersimplexThreeSixUpToTen) {
  auto golden = load("fermion_h36_r10.txt");
  ASSERT_EQ(golden.size(), 72u);
  HRepresentation h = generate_h_representation(Params{Statistics::fermion, 3, 6, 10});
  EXPECT_EQ(h.lineup_counts, (std::vector<std::size_t>{1, 1, 2, 4, 8, 18, 40, 90, 168, 324}));
  std::vector<std::size_t> news;
  for (int r = 1; r <= 10; ++r) news.push_back(h.new_inequalities(r));
  EXPECT_EQ(news, (std::vector<std::size_t>{2, 1, 1, 2, 3, 3, 5, 9, 14, 32}));
  golden = sorted(std::move(golden));
  ASSERT_EQ(h.inequalities.size(), golden.size());
  for (std::size_t i = 0; i < golden.size(); ++i) {
    SCOPED_TRACE("row " + std::to_string(i));
    EXPECT_EQ(h.inequalities[i].first_r, golden[i].first_r);
    EXPECT_EQ(h.inequalities[i].lhs, golden[i].lhs);
    ASSERT_EQ(golden[i].tail.size(), 1u);
    EXPECT_EQ(h.inequalities[i].rhs_w, golden[i].tail[0]);
  }
}

TEST(Golden, FermionFamiliesDirectAtFourteen) {
  auto golden = load("fermion_base_r8_d14.txt");
  ASSERT_EQ(golden.size(), 43u);
  expect_affine_table(generate_h_representation(Params{Statistics::fermion, 7, 14, 8}), golden, 8);
}

TEST(Golden, FermionFamiliesLiftedToFourteen) {
  auto golden = load("fermion_base_r8_d14.txt");
  for (int r = 1; r <= 7; ++r) {
    HRepresentation base = generate_h_representation(base_params(Statistics::fermion, r));
    expect_affine_table(stability_lift(base, 7, 14), golden, r);
  }
}

TEST(Golden, BosonFamiliesDirectAtEight) {
  auto golden = load("boson_base_r8_d8.txt");
  ASSERT_EQ(golden.size(), 36u);
  expect_affine_table(generate_h_representation(Params{Statistics::boson, 7, 8, 8}), golden, 8);
}

TEST(Golden, BosonFamiliesLiftedToEight) {
  auto golden = load("boson_base_r8_d8.txt");
  for (int r = 1; r <= 7; ++r) {
    HRepresentation base = generate_h_representation(base_params(Statistics::boson, r));
    expect_affine_table(stability_lift(base, 7, 8), golden, r);
  }
}

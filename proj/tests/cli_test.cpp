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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "lineup/io.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(LINEUP_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lineup_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, GenerateJson) {
  Outcome r = run("generate --statistics fermion --r 4 --particles 3 --orbitals 6");
  ASSERT_EQ(r.code, 0);
  auto j = lineup::io::json::parse(r.out);
  EXPECT_EQ(j["inequalities"].size(), 6u);
  EXPECT_EQ(j["occupation_vectors"].size(), 4u);
  EXPECT_EQ(j["equation"]["value"], 3);
  Outcome b = run("generate -s boson -r 4 -N 3 -d 4");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(lineup::io::json::parse(b.out)["inequalities"].size(), 5u);
}

TEST(Cli, GenerateFormats) {
  Outcome csv = run("generate -s fermion -r 1 -N 2 -d 4 --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "lhs1,lhs2,lhs3,lhs4,a,b,c1,first_r\n1,0,0,0,0,1,0,1\n1,1,1,0,1,0,0,1\n");
  Outcome md = run("generate -s fermion -r 4 -N 3 -d 6 --format markdown --weights 2/5,3/10,1/5,1/10 --decimals 2");
  ASSERT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("2N-2 + w_1 + w_2 | 47/10 (~4.70) |"), std::string::npos);
  auto path = temp_file("gen.json");
  Outcome file = run("generate -s fermion -r 2 -N 2 -d 4 -o " + path.string());
  ASSERT_EQ(file.code, 0);
  EXPECT_TRUE(file.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(lineup::io::json::parse(f)["params"]["r"], 2);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("generate -s fermion -r 4 -N 3").code, 2);
  EXPECT_EQ(run("generate -s anyon -r 4 -N 3 -d 6").code, 2);
  EXPECT_EQ(run("generate -s fermion -r 40 -N 3 -d 6").code, 2);
  EXPECT_EQ(run("generate -s fermion -r 4 -N 3 -d 6 --weights 1/2,1/2,0,0").code, 2);
  EXPECT_EQ(run("generate -s fermion -r 4 -N 3 -d 6 --format xml").code, 2);
  EXPECT_EQ(run("verify -s fermion -r 1 -N 2 -d 9").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Lift) {
  auto base = temp_file("base.json");
  ASSERT_EQ(run("generate -s fermion -r 4 -N 3 -d 6 -o " + base.string()).code, 0);
  Outcome lifted = run("lift --base " + base.string() + " -N 5 -d 9");
  ASSERT_EQ(lifted.code, 0);
  Outcome direct = run("generate -s fermion -r 4 -N 5 -d 9");
  auto a = lineup::io::json::parse(lifted.out), b = lineup::io::json::parse(direct.out);
  EXPECT_EQ(a["inequalities"], b["inequalities"]);
  EXPECT_EQ(run("lift --base " + base.string() + " -N 2 -d 9").code, 2);
  EXPECT_EQ(run("lift --base /nonexistent.json -N 5 -d 9").code, 2);
  std::filesystem::remove(base);
}

TEST(Cli, Tables) {
  Outcome r = run("tables --which ferbos --max-r 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| fermions #OVs | 1 | 1 | 2 | 4 | 10 |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| bosons #ineqs | 1 | 1 | 1 | 2 | 3 |"), std::string::npos) << r.out;
  Outcome h = run("tables --which h36 --max-r 6");
  ASSERT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("| #lineups | 1 | 1 | 2 | 4 | 8 | 18 |"), std::string::npos) << h.out;
  EXPECT_EQ(run("tables --which other").code, 2);
}

TEST(Cli, Verify) {
  Outcome r = run("verify -s fermion -r 4 -N 3 -d 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("AGREE"), std::string::npos);
  Outcome b = run("verify -s boson -r 3 -N 2 -d 3 --weights 1/2,1/3,1/6");
  EXPECT_EQ(b.code, 0);
}

TEST(Cli, Threshold) {
  Outcome no = run("threshold -s fermion -N 3 -d 9 --generators 178 239 456");
  ASSERT_EQ(no.code, 0);
  EXPECT_NE(no.out.find("ideal size: 36"), std::string::npos);
  EXPECT_NE(no.out.find("threshold: no"), std::string::npos);
  Outcome yes = run("threshold -s fermion -N 3 -d 7 -g 147 246");
  ASSERT_EQ(yes.code, 0);
  EXPECT_NE(yes.out.find("threshold: yes"), std::string::npos);
  EXPECT_EQ(run("threshold -s fermion -N 3 -d 7 -g 148").code, 2);
}

TEST(Cli, Membership) {
  Outcome out = run("membership -s fermion -r 4 -N 3 -d 6 -x 1,1,1,0,0,0 -w 2/5,3/10,1/5,1/10");
  EXPECT_EQ(out.code, 1);
  EXPECT_NE(out.out.find("outside"), std::string::npos);
  EXPECT_NE(out.out.find("violated: [1,1,1,0,0,0] . x <= 12/5"), std::string::npos) << out.out;
  Outcome in = run("membership -s fermion -r 4 -N 3 -d 6 -x 1/2,1/2,1/2,1/2,1/2,1/2");
  EXPECT_EQ(in.code, 0);
  EXPECT_NE(in.out.find("inside"), std::string::npos);
  EXPECT_EQ(run("membership -s fermion -r 4 -N 3 -d 6 -x 1,1,1,1,0,0").code, 2);
  EXPECT_EQ(run("membership -s fermion -r 4 -N 3 -d 6 -x 1,1,1").code, 2);
}

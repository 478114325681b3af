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

// Command-line front end: generate, lift, tables, verify, threshold, membership.
// Exit codes: 0 success / inside, 1 outside / disagreement, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lineup/lineup.hpp"

namespace {

using namespace lineup;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Common {
  std::string statistics;
  int r = 1;
  int N = 0;
  int d = 0;
  std::string weights;
  std::string format = "json";
  std::string output;
  int decimals = -1;
};

Params params_of(const Common& c) {
  Params p{parse_statistics(c.statistics), c.N, c.d, c.r};
  p.validate();
  return p;
}

std::optional<RatVector> weights_of(const std::string& text, int r) {
  if (text.empty()) return std::nullopt;
  RatVector w = io::parse_rational_list(text);
  if (static_cast<int>(w.size()) != r)
    throw std::invalid_argument("expected " + std::to_string(r) + " weights, got " + std::to_string(w.size()));
  validate_weights(w, true);
  return w;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
}

std::string render(const HRepresentation& h, const Common& c) {
  io::OutputOptions opt;
  opt.weights = weights_of(c.weights, h.params.r);
  if (c.decimals >= 0) opt.decimals = c.decimals;
  if (c.format == "json") return io::to_json(h, opt).dump(2) + "\n";
  if (c.format == "csv") return io::to_csv(h);
  if (c.format == "markdown" || c.format == "md") return io::to_markdown(h, opt);
  throw std::invalid_argument("unknown format '" + c.format + "'");
}

HRepresentation read_h_rep(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read '" + path + "'");
  return io::from_json(io::json::parse(f));
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " | " : "") + std::to_string(v[i]);
  return s;
}

std::string ferbos_table(int max_r) {
  std::vector<std::size_t> fo, fi, bo, bi;
  for (int r = 1; r <= max_r; ++r) {
    HRepresentation f = generate_h_representation(base_params(Statistics::fermion, r));
    HRepresentation b = generate_h_representation(base_params(Statistics::boson, r));
    fo.push_back(f.vertices.size());
    fi.push_back(f.new_inequalities(r));
    bo.push_back(b.vertices.size());
    bi.push_back(b.new_inequalities(r));
  }
  std::ostringstream os;
  os << "| r |";
  for (int r = 1; r <= max_r; ++r) os << " " << r << " |";
  os << "\n|---|";
  for (int r = 1; r <= max_r; ++r) os << "---:|";
  os << "\n| fermions #OVs | " << join(fo) << " |\n";
  os << "| fermions #ineqs | " << join(fi) << " |\n";
  os << "| bosons #OVs | " << join(bo) << " |\n";
  os << "| bosons #ineqs | " << join(bi) << " |\n";
  return os.str();
}

std::string h36_table(int max_r) {
  HRepresentation h = generate_h_representation(Params{Statistics::fermion, 3, 6, max_r});
  std::vector<std::size_t> news;
  for (int r = 1; r <= max_r; ++r) news.push_back(h.new_inequalities(r));
  std::ostringstream os;
  os << "| r |";
  for (int r = 1; r <= max_r; ++r) os << " " << r << " |";
  os << "\n|---|";
  for (int r = 1; r <= max_r; ++r) os << "---:|";
  os << "\n| #lineups | " << join(h.lineup_counts) << " |\n";
  os << "| #new inequalities | " << join(news) << " |\n";
  os << "\nTotal inequalities at r=" << max_r << ": " << h.inequalities.size() << "\n";
  return os.str();
}

std::string point_string(const RatVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].get_str();
  return s + ")";
}

void add_params(CLI::App* cmd, Common& c, bool with_r) {
  cmd->add_option("--statistics,-s", c.statistics, "fermion or boson")->required();
  if (with_r) cmd->add_option("--r,-r", c.r, "lineup length")->required();
  cmd->add_option("--particles,-N", c.N, "number of particles N")->required();
  cmd->add_option("--orbitals,-d", c.d, "number of orbitals d")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusion inequalities of lineup polytopes for fermions and bosons"};
  app.require_subcommand(1);

  Common gen;
  auto* generate = app.add_subcommand("generate", "H-representation of a spectral polytope");
  add_params(generate, gen, true);
  generate->add_option("--weights,-w", gen.weights, "strictly decreasing rationals p/q, comma separated");
  generate->add_option("--format,-f", gen.format, "json, csv or markdown");
  generate->add_option("--output,-o", gen.output, "output file (default stdout)");
  generate->add_option("--decimals", gen.decimals, "also show decimal approximations with k digits");

  Common lift_opts;
  std::string base_file;
  auto* lift = app.add_subcommand("lift", "transport a base-case system to (N, d)");
  lift->add_option("--base", base_file, "JSON produced by generate")->required();
  lift->add_option("--particles,-N", lift_opts.N, "target N")->required();
  lift->add_option("--orbitals,-d", lift_opts.d, "target d")->required();
  lift->add_option("--weights,-w", lift_opts.weights, "weights for numeric right-hand sides");
  lift->add_option("--format,-f", lift_opts.format, "json, csv or markdown");
  lift->add_option("--output,-o", lift_opts.output, "output file (default stdout)");
  lift->add_option("--decimals", lift_opts.decimals, "decimal approximations with k digits");

  std::string which = "ferbos";
  int max_r = 0;
  auto* tables = app.add_subcommand("tables", "reproduce the counting tables");
  tables->add_option("--which", which, "ferbos or h36");
  tables->add_option("--max-r", max_r, "largest r (default 8 for ferbos, 10 for h36); larger values are best effort");

  Common ver;
  auto* verify = app.add_subcommand("verify", "compare against brute-force facet enumeration");
  add_params(verify, ver, true);
  verify->add_option("--weights,-w", ver.weights, "strictly decreasing rationals (default 2(r+1-j)/(r(r+1)))");

  Common thr;
  std::vector<std::string> generators;
  auto* threshold = app.add_subcommand("threshold", "decide whether a Gale ideal is threshold");
  add_params(threshold, thr, false);
  threshold->add_option("--generators,-g", generators, "generators such as 178 239 456 (1,2,10 when d > 9)")
      ->required();

  Common mem;
  std::string spectrum, input;
  auto* membership = app.add_subcommand("membership", "test a spectrum against the inequalities");
  add_params(membership, mem, true);
  membership->add_option("--spectrum,-x", spectrum, "d rationals p/q, comma separated")->required();
  membership->add_option("--weights,-w", mem.weights, "strictly decreasing rationals (default 2(r+1-j)/(r(r+1)))");
  membership->add_option("--input,-i", input, "JSON system to use instead of generating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (generate->parsed()) {
      HRepresentation h = generate_h_representation(params_of(gen));
      emit(render(h, gen), gen.output);
      return kOk;
    }
    if (lift->parsed()) {
      HRepresentation base = read_h_rep(base_file);
      HRepresentation h = stability_lift(base, lift_opts.N, lift_opts.d);
      emit(render(h, lift_opts), lift_opts.output);
      return kOk;
    }
    if (tables->parsed()) {
      if (which == "ferbos") {
        int r = max_r > 0 ? max_r : 8;
        if (r > 8) std::cerr << "note: r > 8 is best effort and may take long\n";
        std::cout << ferbos_table(r);
      } else if (which == "h36") {
        std::cout << h36_table(max_r > 0 ? max_r : 10);
      } else {
        throw std::invalid_argument("--which must be ferbos or h36");
      }
      return kOk;
    }
    if (verify->parsed()) {
      Params p = params_of(ver);
      RatVector w = ver.weights.empty() ? default_weights(p.r) : *weights_of(ver.weights, p.r);
      HRepresentation h = generate_h_representation(p);
      oracle::CompareReport rep = oracle::compare_h_reps(h, oracle::brute_force_h_rep(p, w), w);
      std::cout << "engine facets (orbit-expanded): " << rep.engine_facets << "\n"
                << "oracle facets: " << rep.oracle_facets << "\n"
                << "affine hull agrees: " << (rep.equations_equal ? "yes" : "no") << "\n";
      for (const auto& v : rep.engine_only) std::cout << "engine only: " << geometry::to_string(v) << "\n";
      for (const auto& v : rep.oracle_only) std::cout << "oracle only: " << geometry::to_string(v) << "\n";
      std::cout << (rep.equal ? "AGREE" : "DISAGREE") << "\n";
      return rep.equal ? kOk : kNegative;
    }
    if (threshold->parsed()) {
      Params p{parse_statistics(thr.statistics), thr.N, thr.d, 1};
      p.validate();
      std::vector<Configuration> gens;
      for (const auto& g : generators) gens.push_back(parse_configuration(g, p));
      GaleIdeal ideal = GaleIdeal::generated_by(p, gens);
      oracle::ThresholdResult res = oracle::is_threshold(ideal);
      std::cout << "ideal size: " << ideal.size() << "\n";
      if (res.threshold) {
        std::cout << "threshold: yes\nwitness: " << geometry::to_string(*res.witness) << "\n";
      } else {
        std::cout << "threshold: no\ncommon point: " << point_string(*res.common_point) << "\n";
      }
      return kOk;
    }
    if (membership->parsed()) {
      Params p = params_of(mem);
      RatVector w = mem.weights.empty() ? default_weights(p.r) : *weights_of(mem.weights, p.r);
      HRepresentation h = input.empty() ? generate_h_representation(p) : read_h_rep(input);
      if (!(h.params == p)) throw std::invalid_argument("input system does not match the given parameters");
      RatVector x = io::parse_rational_list(spectrum);
      MembershipResult res = check_membership(h, x, w);
      std::cout << (res.inside ? "inside" : "outside") << "\n";
      for (std::size_t i : res.violated) {
        const auto& e = h.inequalities[i];
        std::cout << "violated: " << geometry::to_string(e.lhs) << " . x <= " << e.rhs(w).get_str() << "  ("
                  << io::affine_rhs_string(e.rhs_affine) << ")\n";
      }
      return res.inside ? kOk : kNegative;
    }
  } catch (const oracle::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

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
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lineup/engine.hpp"

namespace lineup::io {

using json = nlohmann::ordered_json;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  Integer n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q = Rational(n, d);
  q.canonicalize();
  return q;
}

/// Comma-separated list of rationals "p/q".
inline RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

/// Decimal approximation with k digits, rounded half away from zero.
inline std::string decimal(const Rational& q, int k) {
  Integer scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
  Integer den = q.get_den() * 2;
  Integer scaled = num / den;
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= k) digits.insert(0, static_cast<std::size_t>(k + 1 - digits.size()), '0');
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(k));
  if (k > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(k));
  return (sgn(q) < 0 && scaled != 0 ? "-" : "") + out;
}

inline json int_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

inline Integer int_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

inline json vector_to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline IntVector vector_from_json(const json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

/// "aN+b + c_1 w_1 + ...", omitting zero terms.
inline std::string affine_rhs_string(const AffineRhs& a) {
  std::string s;
  if (sgn(a.a) == 0) {
    s = a.b.get_str();
  } else {
    s = (a.a == 1 ? std::string() : a.a.get_str()) + "N";
    if (sgn(a.b) > 0) s += "+" + a.b.get_str();
    if (sgn(a.b) < 0) s += a.b.get_str();
  }
  for (std::size_t j = 0; j < a.c.size(); ++j) {
    if (sgn(a.c[j]) == 0) continue;
    Integer c = abs(a.c[j]);
    s += sgn(a.c[j]) > 0 ? " + " : " - ";
    s += (c == 1 ? std::string() : c.get_str()) + "w_" + std::to_string(j + 1);
  }
  return s;
}

struct OutputOptions {
  std::optional<RatVector> weights;
  std::optional<int> decimals;
};

inline json to_json(const HRepresentation& h, const OutputOptions& opt = {}) {
  json j;
  j["params"] = {{"statistics", to_string(h.params.statistics)},
                 {"r", h.params.r},
                 {"N", h.params.N},
                 {"d", h.params.d}};
  if (opt.weights) {
    json w = json::array();
    for (const auto& x : *opt.weights) w.push_back(to_string(x));
    j["weights"] = w;
  }
  j["lineup_counts"] = h.lineup_counts;
  json ovs = json::array();
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    json o;
    json seq = json::array();
    if (i < h.lineups.size())
      for (const auto& c : h.lineups[i]) seq.push_back(lineup::to_string(c));
    o["lineup"] = seq;
    o["matrix"] = h.vertices[i].M;
    if (opt.weights) {
      json x = json::array();
      for (const auto& v : h.vertices[i].evaluate(*opt.weights)) x.push_back(to_string(v));
      o["point"] = x;
    }
    ovs.push_back(o);
  }
  j["occupation_vectors"] = ovs;
  json ineqs = json::array();
  for (const auto& e : h.inequalities) {
    json q;
    q["lhs"] = vector_to_json(e.lhs);
    q["rhs_w"] = vector_to_json(e.rhs_w);
    q["rhs_affine"] = {{"a", int_to_json(e.rhs_affine.a)},
                       {"b", int_to_json(e.rhs_affine.b)},
                       {"c", vector_to_json(e.rhs_affine.c)}};
    q["first_r"] = e.first_r;
    if (opt.weights) {
      Rational v = e.rhs(*opt.weights);
      q["rhs_numeric"] = to_string(v);
      if (opt.decimals) q["rhs_approx"] = "~" + decimal(v, *opt.decimals);
    }
    ineqs.push_back(q);
  }
  j["inequalities"] = ineqs;
  j["equation"] = {{"coeffs", std::vector<int>(static_cast<std::size_t>(h.params.d), 1)}, {"value", h.params.N}};
  return j;
}

inline HRepresentation from_json(const json& j) {
  HRepresentation h;
  const json& p = j.at("params");
  h.params.statistics = parse_statistics(p.at("statistics").get<std::string>());
  h.params.r = p.at("r").get<int>();
  h.params.N = p.at("N").get<int>();
  h.params.d = p.at("d").get<int>();
  h.params.validate();
  if (j.contains("lineup_counts")) h.lineup_counts = j.at("lineup_counts").get<std::vector<std::size_t>>();
  for (const auto& o : j.at("occupation_vectors")) {
    SymbolicOccupationVector v;
    v.M = o.at("matrix").get<std::vector<std::vector<int>>>();
    if (v.d() != h.params.d || v.r() != h.params.r) throw std::invalid_argument("occupation vector has wrong shape");
    h.vertices.push_back(std::move(v));
    if (o.contains("lineup")) {
      std::vector<Configuration> seq;
      for (const auto& s : o.at("lineup")) seq.push_back(parse_configuration(s.get<std::string>(), h.params));
      h.lineups.push_back(std::move(seq));
    }
  }
  if (!h.lineups.empty() && h.lineups.size() != h.vertices.size())
    throw std::invalid_argument("lineup list and occupation vectors differ in length");
  for (const auto& q : j.at("inequalities")) {
    ExclusionInequality e;
    e.lhs = vector_from_json(q.at("lhs"));
    e.rhs_w = vector_from_json(q.at("rhs_w"));
    const json& a = q.at("rhs_affine");
    e.rhs_affine.a = int_from_json(a.at("a"));
    e.rhs_affine.b = int_from_json(a.at("b"));
    e.rhs_affine.c = vector_from_json(a.at("c"));
    e.first_r = q.at("first_r").get<int>();
    if (static_cast<int>(e.lhs.size()) != h.params.d || static_cast<int>(e.rhs_w.size()) != h.params.r)
      throw std::invalid_argument("inequality has wrong shape");
    h.inequalities.push_back(std::move(e));
  }
  return h;
}

/// One inequality per row: lhs columns, a, b, c columns, first_r.
inline std::string to_csv(const HRepresentation& h) {
  std::ostringstream os;
  for (int i = 1; i <= h.params.d; ++i) os << "lhs" << i << ",";
  os << "a,b,";
  for (int j = 1; j <= h.params.r; ++j) os << "c" << j << ",";
  os << "first_r\n";
  for (const auto& e : h.inequalities) {
    for (const auto& x : e.lhs) os << x.get_str() << ",";
    os << e.rhs_affine.a.get_str() << "," << e.rhs_affine.b.get_str() << ",";
    for (const auto& x : e.rhs_affine.c) os << x.get_str() << ",";
    os << e.first_r << "\n";
  }
  return os.str();
}

/// Inequalities grouped by first_r: LHS coefficients | aN+b + sum c_j w_j.
inline std::string to_markdown(const HRepresentation& h, const OutputOptions& opt = {}) {
  std::ostringstream os;
  const Params& p = h.params;
  os << "Inequalities on x1 >= ... >= x" << p.d << " (" << to_string(p.statistics) << ", r=" << p.r << ", N=" << p.N
     << ", d=" << p.d << "), together with x1 + ... + x" << p.d << " = " << p.N << ".\n\n";
  os << "| r |";
  for (int i = 1; i <= p.d; ++i) os << " x" << i << " |";
  os << " RHS |";
  if (opt.weights) os << " RHS at w |";
  os << "\n|---|";
  for (int i = 0; i < p.d; ++i) os << "---:|";
  os << "---|";
  if (opt.weights) os << "---|";
  os << "\n";
  int last = 0;
  for (const auto& e : h.inequalities) {
    os << "| " << (e.first_r != last ? std::to_string(e.first_r) : std::string()) << " |";
    last = e.first_r;
    for (const auto& x : e.lhs) os << " " << x.get_str() << " |";
    os << " " << affine_rhs_string(e.rhs_affine) << " |";
    if (opt.weights) {
      Rational v = e.rhs(*opt.weights);
      os << " " << to_string(v);
      if (opt.decimals) os << " (~" << decimal(v, *opt.decimals) << ")";
      os << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace lineup::io

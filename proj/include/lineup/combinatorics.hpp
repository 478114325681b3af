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
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lineup {

enum class Statistics { fermion, boson };

inline std::string to_string(Statistics s) {
  return s == Statistics::fermion ? "fermion" : "boson";
}

inline Statistics parse_statistics(std::string_view s) {
  if (s == "fermion" || s == "fermions" || s == "f") return Statistics::fermion;
  if (s == "boson" || s == "bosons" || s == "b") return Statistics::boson;
  throw std::invalid_argument("unknown statistics '" + std::string(s) + "'");
}

/// Binomial coefficient with saturation at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

struct Params {
  Statistics statistics = Statistics::fermion;
  int N = 0;
  int d = 0;
  int r = 1;

  /// Number of configurations: C(d, N) for fermions, C(N + d - 1, N) for bosons.
  std::uint64_t num_configurations() const {
    if (statistics == Statistics::fermion) return binomial(d, N);
    return binomial(static_cast<std::uint64_t>(N) + d - 1, N);
  }

  void validate() const {
    if (d < 1) throw std::invalid_argument("number of orbitals d must be >= 1");
    if (N < 0) throw std::invalid_argument("number of particles N must be >= 0");
    if (statistics == Statistics::fermion && N > d)
      throw std::invalid_argument("fermions require N <= d");
    if (statistics == Statistics::boson && N < 1)
      throw std::invalid_argument("bosons require N >= 1");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (static_cast<std::uint64_t>(r) > num_configurations())
      throw std::invalid_argument("r = " + std::to_string(r) +
                                  " exceeds the number of configurations " +
                                  std::to_string(num_configurations()));
  }

  bool operator==(const Params&) const = default;
};

/// A multiset of orbitals in [d], stored as its multiplicity vector.
/// Fermionic configurations have multiplicities in {0, 1}.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<int> multiplicities)
      : mult_(std::move(multiplicities)) {}

  static Configuration from_tuple(const std::vector<int>& sorted, int d) {
    std::vector<int> m(d, 0);
    for (int s : sorted) {
      if (s < 1 || s > d) throw std::invalid_argument("orbital index out of range");
      ++m[s - 1];
    }
    return Configuration(std::move(m));
  }

  /// Minimum of the Gale order: {1..N} for fermions, {1^N} for bosons.
  static Configuration minimum(const Params& p) {
    std::vector<int> m(p.d, 0);
    if (p.statistics == Statistics::fermion) {
      for (int i = 0; i < p.N; ++i) m[i] = 1;
    } else {
      m[0] = p.N;
    }
    return Configuration(std::move(m));
  }

  int d() const { return static_cast<int>(mult_.size()); }
  int size() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }
  const std::vector<int>& multiplicities() const { return mult_; }
  int operator[](int i) const { return mult_[i]; }

  /// Sorted tuple s_1 <= ... <= s_N of 1-based orbital indices.
  std::vector<int> tuple() const {
    std::vector<int> t;
    for (int i = 0; i < d(); ++i)
      for (int k = 0; k < mult_[i]; ++k) t.push_back(i + 1);
    return t;
  }

  /// Rank in the fermionic Gale poset: sum(S) - N(N+1)/2 + 1.
  int rank() const {
    std::vector<int> t = tuple();
    int n = static_cast<int>(t.size());
    return std::accumulate(t.begin(), t.end(), 0) - n * (n + 1) / 2 + 1;
  }

  bool operator==(const Configuration&) const = default;

  /// Lexicographic order on sorted tuples.
  bool operator<(const Configuration& o) const {
    std::vector<int> a = tuple(), b = o.tuple();
    return a < b;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : mult_) h = (h ^ static_cast<std::size_t>(v + 1)) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::vector<int> mult_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const { return c.hash(); }
};

/// Compact text form: "1246" when all indices are single digits, otherwise "1,2,10".
inline std::string to_string(const Configuration& c) {
  std::vector<int> t = c.tuple();
  bool wide = std::any_of(t.begin(), t.end(), [](int s) { return s > 9; });
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

inline Configuration parse_configuration(std::string_view text, const Params& p) {
  std::vector<int> t;
  if (text.find(',') != std::string_view::npos) {
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) t.push_back(std::stoi(item));
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad configuration '" + std::string(text) + "'");
      t.push_back(ch - '0');
    }
  }
  if (static_cast<int>(t.size()) != p.N)
    throw std::invalid_argument("configuration '" + std::string(text) + "' does not have N elements");
  if (!std::is_sorted(t.begin(), t.end()))
    throw std::invalid_argument("configuration '" + std::string(text) + "' is not sorted");
  if (p.statistics == Statistics::fermion && std::adjacent_find(t.begin(), t.end()) != t.end())
    throw std::invalid_argument("fermionic configuration '" + std::string(text) + "' repeats an orbital");
  return Configuration::from_tuple(t, p.d);
}

/// Componentwise comparison of sorted tuples.
inline bool gale_leq(const Configuration& a, const Configuration& b) {
  std::vector<int> s = a.tuple(), t = b.tuple();
  if (s.size() != t.size()) throw std::invalid_argument("gale_leq: sizes differ");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > t[i]) return false;
  return true;
}

namespace detail {

inline bool valid_tuple(const std::vector<int>& t, int d, Statistics st) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > d) return false;
    if (i > 0) {
      if (st == Statistics::fermion && t[i] <= t[i - 1]) return false;
      if (st == Statistics::boson && t[i] < t[i - 1]) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Configurations obtained by decrementing one entry of the sorted tuple.
inline std::vector<Configuration> lower_covers(const Configuration& c, Statistics st) {
  std::vector<int> t = c.tuple();
  std::vector<Configuration> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && t[i - 1] == t[i]) continue;
    std::vector<int> u = t;
    --u[i];
    if (detail::valid_tuple(u, c.d(), st)) out.push_back(Configuration::from_tuple(u, c.d()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Configurations obtained by incrementing one entry of the sorted tuple.
inline std::vector<Configuration> upper_covers(const Configuration& c, Statistics st) {
  std::vector<int> t = c.tuple();
  std::vector<Configuration> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i + 1 < t.size() && t[i + 1] == t[i]) continue;
    std::vector<int> u = t;
    ++u[i];
    if (detail::valid_tuple(u, c.d(), st)) out.push_back(Configuration::from_tuple(u, c.d()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every configuration for the given parameters, lexicographically sorted.
inline std::vector<Configuration> all_configurations(const Params& p) {
  std::vector<Configuration> out;
  std::vector<int> t(p.N);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == p.N) {
      out.push_back(Configuration::from_tuple(t, p.d));
      return;
    }
    for (int v = lo; v <= p.d; ++v) {
      t[pos] = v;
      rec(pos + 1, p.statistics == Statistics::fermion ? v + 1 : v);
    }
  };
  rec(0, 1);
  return out;
}

/// A Gale ideal together with the order in which its elements were inserted.
class GaleIdeal {
 public:
  explicit GaleIdeal(Params p) : params_(p) {}

  const Params& params() const { return params_; }
  std::size_t size() const { return order_.size(); }
  bool contains(const Configuration& c) const { return members_.count(c) > 0; }
  const std::vector<Configuration>& insertion_order() const { return order_; }

  /// Inserts a configuration; requires all its lower covers to be present.
  void insert(const Configuration& c) {
    if (contains(c)) throw std::invalid_argument("configuration already in ideal");
    for (const auto& l : lower_covers(c, params_.statistics))
      if (!contains(l))
        throw std::invalid_argument("inserting " + to_string(c) + " breaks the ideal property");
    members_.insert(c);
    order_.push_back(c);
  }

  /// Elements outside the ideal whose lower covers all lie in it, sorted.
  std::vector<Configuration> runner_ups() const {
    std::set<Configuration> out;
    if (order_.empty()) {
      out.insert(Configuration::minimum(params_));
    } else {
      for (const auto& m : order_)
        for (const auto& u : upper_covers(m, params_.statistics)) {
          if (contains(u)) continue;
          auto lc = lower_covers(u, params_.statistics);
          if (std::all_of(lc.begin(), lc.end(), [&](const Configuration& x) { return contains(x); }))
            out.insert(u);
        }
    }
    return {out.begin(), out.end()};
  }

  /// Maximal elements of the ideal.
  std::vector<Configuration> maximal_elements() const {
    std::vector<Configuration> out;
    for (const auto& m : order_) {
      auto uc = upper_covers(m, params_.statistics);
      if (std::none_of(uc.begin(), uc.end(), [&](const Configuration& x) { return contains(x); }))
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Down-set generated by the given configurations, inserted in a linear extension.
  static GaleIdeal generated_by(const Params& p, const std::vector<Configuration>& gens) {
    GaleIdeal ideal(p);
    std::vector<Configuration> all = all_configurations(p);
    std::vector<Configuration> members;
    for (const auto& c : all)
      if (std::any_of(gens.begin(), gens.end(), [&](const Configuration& g) { return gale_leq(c, g); }))
        members.push_back(c);
    std::stable_sort(members.begin(), members.end(), [](const Configuration& a, const Configuration& b) {
      std::vector<int> s = a.tuple(), t = b.tuple();
      return std::accumulate(s.begin(), s.end(), 0) < std::accumulate(t.begin(), t.end(), 0);
    });
    for (const auto& m : members) ideal.insert(m);
    return ideal;
  }

 private:
  Params params_;
  std::unordered_set<Configuration, ConfigurationHash> members_;
  std::vector<Configuration> order_;
};

/// (s_1, s_2 - 1, ..., s_N - N + 1): fermions on d orbitals to bosons on d - N + 1.
inline Configuration natural_map(const Configuration& c) {
  std::vector<int> t = c.tuple();
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) t[i] -= i;
  return Configuration::from_tuple(t, c.d() - n + 1);
}

inline Configuration natural_map_inverse(const Configuration& c) {
  std::vector<int> t = c.tuple();
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) t[i] += i;
  return Configuration::from_tuple(t, c.d() + n - 1);
}

}  // namespace lineup

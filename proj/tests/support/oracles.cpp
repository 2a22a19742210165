// Copyright 2026 The ADITUM Authors
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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace aditum::oracle {

// --- Rational ---------------------------------------------------------------------

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

Rational operator+(Rational a, Rational b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Rational operator-(Rational a, Rational b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Rational operator*(Rational a, Rational b) {
  return {a.num * b.num, a.den * b.den};
}
Rational operator/(Rational a, Rational b) {
  return {a.num * b.den, a.den * b.num};
}
bool operator<(Rational a, Rational b) {
  return a.num * b.den < b.num * a.den;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

// --- negative examples ------------------------------------------------------------

Rational f1(const std::vector<std::string>& values) {
  std::int64_t mismatches = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const bool missing = values[i].empty() || values[j].empty();
      mismatches += missing || values[i] != values[j];
    }
  }
  return {mismatches, static_cast<std::int64_t>(values.size())};
}

namespace {

std::int64_t hamming_with_missing_equal(const Tuple& a, const Tuple& b) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
  return d;
}

std::int64_t present(const Tuple& a) {
  return std::count_if(a.begin(), a.end(),
                       [](const std::string& s) { return !s.empty(); });
}

Rational jaccard_distance(const Tuple& a, const Tuple& b) {
  std::int64_t matches = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    matches += !a[j].empty() && a[j] == b[j];
  }
  const std::int64_t denom = present(a) + present(b) - matches;
  return Rational(1) - Rational(matches, denom);
}

}  // namespace

Rational f2(const std::vector<Tuple>& profiles) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = 0; j < profiles.size(); ++j) {
      if (i != j) total += hamming_with_missing_equal(profiles[i], profiles[j]);
    }
  }
  return {total};
}

Rational f2_hat(const std::vector<Tuple>& profiles) {
  return f2(profiles) / Rational(2 * static_cast<std::int64_t>(profiles.size()));
}

Rational f2_hat_hat(const std::vector<Tuple>& profiles) {
  const auto n = static_cast<std::int64_t>(profiles.size());
  return f2(profiles) / Rational(n * (n - 1));
}

Rational f3(const std::vector<Tuple>& profiles) {
  Rational total;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = 0; j < profiles.size(); ++j) {
      if (i != j) total = total + jaccard_distance(profiles[i], profiles[j]);
    }
  }
  return total;
}

Rational f3_hat(const std::vector<Tuple>& profiles) {
  return f3(profiles) / Rational(2 * static_cast<std::int64_t>(profiles.size()));
}

Rational f4(const std::vector<Tuple>& profiles) {
  const std::size_t m = profiles.front().size();
  std::int64_t unanimous = 0;
  std::int64_t distinct = 0;
  for (std::size_t j = 0; j < m; ++j) {
    std::set<std::string> seen;
    bool all_same = true;
    for (const Tuple& t : profiles) {
      if (!t[j].empty()) seen.insert(t[j]);
      all_same = all_same && !t[j].empty() && t[j] == profiles.front()[j];
    }
    unanimous += all_same;
    distinct += static_cast<std::int64_t>(seen.size());
  }
  return Rational(1) - Rational(unanimous, distinct);
}

// --- brute-force diversity ----------------------------------------------------------

double aw_value(const ProfileSet& profiles, std::span<const NodeId> seeds,
                double lambda) {
  const Schema& schema = profiles.schema();
  double total = 0.0;
  for (std::size_t j = 0; j < schema.attribute_count(); ++j) {
    double attribute = 0.0;
    for (std::size_t x = 0; x < schema.domain_size(j); ++x) {
      const auto a = static_cast<std::int32_t>(schema.qualify(j, x));
      std::size_t n = 0;
      for (NodeId v : seeds) n += profiles.cell(v, j) == a;
      for (std::size_t i = 1; i <= n; ++i) {
        attribute += std::pow(static_cast<double>(i), -lambda);
      }
    }
    total += schema.weight(j) * attribute;
  }
  return total;
}

std::vector<std::vector<char>> reachability(const DiffusionGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const Edge& e : graph.edges()) reach[e.src][e.dst] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = 0;
  return reach;
}

double hamming_value(const DiffusionGraph& graph, const ProfileSet& profiles,
                     std::size_t radius, std::span<const NodeId> seeds) {
  const auto reach = reachability(graph);
  const std::size_t m = profiles.attribute_count();
  std::set<NodeId> covered;
  for (NodeId v : seeds) {
    for (NodeId u = 0; u < graph.node_count(); ++u) {
      if (!reach[v][u]) continue;
      std::size_t d = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const auto a = profiles.cell(u, j);
        const auto b = profiles.cell(v, j);
        d += a == ProfileSet::kMissing || b == ProfileSet::kMissing || a != b;
      }
      if (d <= radius) covered.insert(u);
    }
  }
  return static_cast<double>(covered.size());
}

namespace {

// Probability of each attribute value under the frequency prior; values
// that never occur carry no mass.
std::vector<double> value_prior(const ProfileSet& profiles) {
  const std::size_t dom = profiles.schema().total_domain_size();
  std::vector<double> p(dom, 0.0);
  double total = 0.0;
  for (NodeId v = 0; v < profiles.node_count(); ++v) {
    for (ValueId a : profiles.values(v)) {
      p[a] += 1.0;
      total += 1.0;
    }
  }
  if (total > 0.0) {
    for (double& x : p) x /= total;
  }
  return p;
}

bool holds(const ProfileSet& profiles, NodeId v, ValueId a) {
  const auto values = profiles.values(v);
  return std::find(values.begin(), values.end(), a) != values.end();
}

double binary_entropy(double q) {
  if (q <= 0.0 || q >= 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

}  // namespace

double entropy_value(const ProfileSet& profiles, std::span<const NodeId> seeds) {
  const auto prior = value_prior(profiles);
  std::map<std::string, double> pattern_mass;
  for (ValueId a = 0; a < prior.size(); ++a) {
    if (prior[a] == 0.0) continue;
    std::string pattern;
    for (NodeId v : seeds) pattern += holds(profiles, v, a) ? '1' : '0';
    pattern_mass[pattern] += prior[a];
  }
  double h = 0.0;
  for (const auto& [pattern, p] : pattern_mass) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double entropy_chain_rule(const ProfileSet& profiles,
                          std::span<const NodeId> seeds) {
  const auto prior = value_prior(profiles);
  double total = 0.0;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    for (std::size_t x = 0; x < (std::size_t{1} << i); ++x) {
      double p_condition = 0.0;
      double p_joint_one = 0.0;
      for (ValueId a = 0; a < prior.size(); ++a) {
        bool matches = true;
        for (std::size_t b = 0; b < i && matches; ++b) {
          matches = holds(profiles, seeds[b], a) == (((x >> b) & 1u) != 0);
        }
        if (!matches) continue;
        p_condition += prior[a];
        if (holds(profiles, seeds[i], a)) p_joint_one += prior[a];
      }
      if (p_condition > 0.0) {
        total += p_condition * binary_entropy(p_joint_one / p_condition);
      }
    }
  }
  return total;
}

namespace {

double concave(ConcaveFn f, double x) {
  return f == ConcaveFn::log2_1p ? std::log2(1.0 + x) : std::sqrt(x);
}

}  // namespace

double class_value(const ClassAssignment& classes, std::span<const NodeId> seeds,
                   ConcaveFn f) {
  std::map<std::int32_t, double> reward;
  for (NodeId v : seeds) reward[classes.class_of[v]] += classes.reward[v];
  double total = 0.0;
  for (const auto& [c, r] : reward) total += concave(f, r);
  return total;
}

double numeric_value(const NumericMatrix& prefs, const DiffusionGraph& graph,
                     GMode g, std::span<const NodeId> seeds, ConcaveFn f) {
  double total = 0.0;
  for (std::size_t m = 0; m < prefs.cols; ++m) {
    double x = 0.0;
    for (NodeId u : seeds) {
      const double weight = g == GMode::unit
                                ? 1.0
                                : static_cast<double>(graph.out_degree(u));
      const double w = prefs.at(u, m);
      x += (std::isnan(w) ? 0.0 : w) * weight;
    }
    total += concave(f, x);
  }
  return total;
}

Rational harmonic(std::size_t n, int lambda) {
  Rational total;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    total = total + Rational(1, lambda == 1 ? ii : ii * ii);
  }
  return total;
}

AwBruteMax aw_brute_max(std::size_t d, std::size_t k, int lambda) {
  AwBruteMax out;
  bool first = true;
  std::vector<std::size_t> counts(d, 0);
  // Enumerate every composition of k into d non-negative parts.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j,
                                                          std::size_t left) {
    if (j + 1 == d) {
      counts[j] = left;
      Rational value;
      for (std::size_t c : counts) value = value + harmonic(c, lambda);
      if (first || out.best < value) {
        out.best = value;
        out.maximizers.clear();
        first = false;
      }
      if (value == out.best) out.maximizers.push_back(counts);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[j] = c;
      rec(j + 1, left - c);
    }
  };
  rec(0, k);
  return out;
}

// --- random instances -----------------------------------------------------------------

DiffusionGraph random_graph(StreamRng& rng, std::size_t n, std::size_t edges,
                            bool lt_compatible) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  // Partial Fisher-Yates for a uniform subset of ordered pairs.
  const std::size_t take = std::min(edges, pairs.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
  }
  pairs.resize(take);
  std::vector<Edge> out;
  for (const auto& [u, v] : pairs) out.push_back({u, v, 1.0 - rng.uniform()});
  if (lt_compatible) {
    std::vector<double> slack(n);
    for (double& s : slack) s = rng.uniform();
    std::vector<double> in_sum(n, 0.0);
    for (const Edge& e : out) in_sum[e.dst] += e.prob;
    for (Edge& e : out) e.prob = e.prob / (in_sum[e.dst] + slack[e.dst]);
  }
  return DiffusionGraph::from_edges(n, std::move(out));
}

std::unique_ptr<Instance> random_instance(std::uint64_t seed,
                                          const InstanceShape& shape) {
  StreamRng rng(seed, StreamPurpose::test, 0);
  auto inst = std::make_unique<Instance>();
  const std::size_t n = shape.nodes;
  inst->graph = random_graph(rng, n, shape.edges, false);

  const std::size_t m = 1 + rng.below(shape.max_attributes);
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> domains;
  std::vector<double> weights;
  double weight_sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    names.push_back("A" + std::to_string(j));
    const std::size_t d = 1 + rng.below(shape.max_domain);
    std::vector<std::string> dom;
    for (std::size_t x = 0; x < d; ++x) dom.push_back("v" + std::to_string(x));
    domains.push_back(dom);
    weights.push_back(0.2 + rng.uniform());
    weight_sum += weights.back();
  }
  for (double& w : weights) w /= weight_sum;
  inst->profiles = ProfileSet(Schema(names, domains, weights), n);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < m; ++j) {
      if (rng.uniform() < shape.missing) continue;
      inst->profiles.set(v, j, rng.below(domains[j].size()));
    }
  }

  const std::size_t h = 1 + rng.below(n);
  for (std::size_t c = 0; c < h; ++c) {
    inst->classes.class_names.push_back("c" + std::to_string(c));
  }
  for (NodeId v = 0; v < n; ++v) {
    inst->classes.class_of.push_back(static_cast<std::int32_t>(rng.below(h)));
    inst->classes.reward.push_back(shape.unit_rewards ? 1.0
                                                      : 0.5 + 1.5 * rng.uniform());
  }

  const std::size_t cols = 1 + rng.below(3);
  inst->prefs = NumericMatrix(n, cols);
  for (double& x : inst->prefs.data) {
    x = rng.uniform() < 0.2 ? 0.0 : rng.uniform();
  }
  return inst;
}

std::vector<FunctionCase> all_function_cases(const Instance& inst) {
  std::vector<FunctionCase> cases;
  const auto* in = &inst;
  for (double lambda : {1.0, 2.0}) {
    FunctionCase c;
    c.label = "aw(lambda=" + std::to_string(static_cast<int>(lambda)) + ")";
    c.function = std::make_unique<AttributeWiseDiversity>(inst.profiles, lambda);
    c.brute = [in, lambda](std::span<const NodeId> s) {
      return aw_value(in->profiles, s, lambda);
    };
    cases.push_back(std::move(c));
  }
  for (std::size_t xi : {1, 3, 5}) {
    FunctionCase c;
    c.label = "hamming(xi=" + std::to_string(xi) + ")";
    c.balls = std::make_unique<HammingBallIndex>(inst.graph, inst.profiles, xi);
    c.function = std::make_unique<HammingDiversity>(*c.balls);
    c.brute = [in, xi](std::span<const NodeId> s) {
      return hamming_value(in->graph, in->profiles, xi, s);
    };
    cases.push_back(std::move(c));
  }
  {
    FunctionCase c;
    c.label = "entropy";
    c.function = std::make_unique<EntropyDiversity>(inst.profiles);
    c.brute = [in](std::span<const NodeId> s) {
      return entropy_value(in->profiles, s);
    };
    cases.push_back(std::move(c));
  }
  {
    FunctionCase c;
    c.label = "class";
    c.function = std::make_unique<ClassDiversity>(
        inst.classes, inst.graph.node_count(), ConcaveFn::log2_1p);
    c.brute = [in](std::span<const NodeId> s) {
      return class_value(in->classes, s, ConcaveFn::log2_1p);
    };
    cases.push_back(std::move(c));
  }
  for (GMode g : {GMode::unit, GMode::degree}) {
    FunctionCase c;
    c.label = g == GMode::unit ? "numeric-u" : "numeric-w";
    c.function = std::make_unique<NumericDiversity>(inst.prefs, inst.graph, g,
                                                    ConcaveFn::log2_1p);
    c.brute = [in, g](std::span<const NodeId> s) {
      return numeric_value(in->prefs, in->graph, g, s, ConcaveFn::log2_1p);
    };
    cases.push_back(std::move(c));
  }
  return cases;
}

// --- selection --------------------------------------------------------------------------

double covered_root_score(const RRCorpus& corpus, std::span<const NodeId> seeds) {
  double total = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto set = corpus.set(i);
    const bool hit = std::any_of(seeds.begin(), seeds.end(), [&](NodeId s) {
      return std::find(set.begin(), set.end(), s) != set.end();
    });
    if (hit) total += corpus.root_score(i);
  }
  return total;
}

std::vector<std::vector<NodeId>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> current;
  std::function<void(NodeId)> rec = [&](NodeId start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (NodeId v = start; v < n; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace aditum::oracle

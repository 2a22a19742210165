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

#include <algorithm>
#include <vector>

#include "aditum/error.hpp"
#include "aditum/selector.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aditum;

namespace {

// A = 0, r1 = 1, B = 2, D = 3.  Three sets rooted at r1: {A,r1,B}, {A,r1},
// {A,r1}.
RRCorpus toy_corpus() {
  return RRCorpus(4, {0, 3, 5, 7}, {0, 1, 2, 0, 1, 0, 1}, {1, 1, 1},
                  {1.0, 1.0, 1.0});
}

TargetSet toy_targets() {
  TargetSet ts;
  ts.members = {1};
  ts.mask = {0, 1, 0, 0};
  ts.total_score = 1.0;
  return ts;
}

// Weighted max coverage by plain rescans, ties to the smaller id.
std::vector<NodeId> coverage_greedy(const RRCorpus& corpus, std::size_t k) {
  std::vector<NodeId> seeds;
  for (std::size_t it = 0; it < k; ++it) {
    double best = 0.0;
    NodeId best_v = 0;
    bool found = false;
    for (NodeId v = 0; v < corpus.node_count(); ++v) {
      if (std::find(seeds.begin(), seeds.end(), v) != seeds.end()) continue;
      std::vector<NodeId> with = seeds;
      with.push_back(v);
      const double gain = oracle::covered_root_score(corpus, with) -
                          oracle::covered_root_score(corpus, seeds);
      if (gain > best) {
        best = gain;
        best_v = v;
        found = true;
      }
    }
    if (!found) break;
    seeds.push_back(best_v);
  }
  return seeds;
}

std::vector<NodeId> diversity_greedy(DiversityFunction& f, std::size_t k) {
  std::vector<NodeId> seeds;
  for (std::size_t it = 0; it < k; ++it) {
    double best = 0.0;
    NodeId best_v = 0;
    bool found = false;
    for (NodeId v = 0; v < f.node_count(); ++v) {
      if (f.committed(v)) continue;
      const double g = f.gain(v);
      if (g > best) {
        best = g;
        best_v = v;
        found = true;
      }
    }
    if (!found) break;
    f.commit(best_v);
    seeds.push_back(best_v);
  }
  return seeds;
}

}  // namespace

TEST_SUITE("selector") {

TEST_CASE("hand-traced toy corpus") {
  const auto corpus = toy_corpus();
  const auto p = synth_profiles(4, std::vector<std::size_t>{2},
                                ValueDistribution::uniform, 1);
  AttributeWiseDiversity aw(p);
  const auto r = build_seed_set(corpus, toy_targets(), aw, {1, 1.0});
  REQUIRE(r.seeds.size() == 1);
  CHECK(r.seeds[0] == 0);
  CHECK(r.trace[0].capital_gain == 3.0);
  CHECK(r.expected_capital == 1.0);
  CHECK(r.covered_sets == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(r.theta == 3);
}

TEST_CASE("zero-gain nodes are never selected") {
  const auto corpus = toy_corpus();
  ProfileSet empty(Schema({"A"}, {{"x"}}), 4);
  AttributeWiseDiversity aw(empty);
  const auto r = build_seed_set(corpus, toy_targets(), aw, {3, 1.0});
  CHECK(r.seeds.size() == 1);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("argument checks") {
  const auto corpus = toy_corpus();
  const auto p = synth_profiles(4, std::vector<std::size_t>{2},
                                ValueDistribution::uniform, 1);
  AttributeWiseDiversity aw(p);
  CHECK_THROWS_AS(build_seed_set(corpus, toy_targets(), aw, {0, 0.5}), UsageError);
  CHECK_THROWS_AS(build_seed_set(corpus, toy_targets(), aw, {1, 1.5}), UsageError);
  aw.commit(2);
  CHECK_THROWS_AS(build_seed_set(corpus, toy_targets(), aw, {1, 0.5}), UsageError);
  RRCorpus none(4, {0}, {}, {}, {});
  AttributeWiseDiversity fresh(p);
  CHECK_THROWS_AS(build_seed_set(none, toy_targets(), fresh, {1, 0.5}), UsageError);
}

TEST_CASE("degenerate alphas reduce to the single objectives") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = oracle::random_instance(seed, {12, 24, 3, 4, 0.2, false});
    auto g = inst->graph;
    const auto ts = select_targets(g, TargetSpec::threshold(0.0));
    const auto corpus = generate_corpus(g, ts, DiffusionModel::ic, {300, seed});
    {
      AttributeWiseDiversity aw(inst->profiles);
      const auto r = build_seed_set(corpus, ts, aw, {3, 1.0});
      CHECK(r.seeds == coverage_greedy(corpus, 3));
    }
    {
      EntropyDiversity e(inst->profiles);
      const auto r = build_seed_set(corpus, ts, e, {3, 0.0});
      EntropyDiversity ref(inst->profiles);
      CHECK(r.seeds == diversity_greedy(ref, 3));
    }
  }
}

TEST_CASE("lazy and eager selection agree; covered sets grow") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = oracle::random_instance(seed, {14, 30, 3, 4, 0.2, false});
    const auto ts = select_targets(inst->graph, TargetSpec::threshold(0.0));
    const auto corpus = generate_corpus(inst->graph, ts, DiffusionModel::ic, {400, seed});
    auto cases = oracle::all_function_cases(*inst);
    auto eager_cases = oracle::all_function_cases(*inst);
    for (std::size_t c = 0; c < cases.size(); ++c) {
      CAPTURE(cases[c].label);
      const double alpha = 0.25 * static_cast<double>(seed % 5);
      const auto lazy = build_seed_set(corpus, ts, *cases[c].function, {5, alpha, true});
      const auto eager =
          build_seed_set(corpus, ts, *eager_cases[c].function, {5, alpha, false});
      CHECK(lazy.seeds == eager.seeds);
      REQUIRE(lazy.trace.size() == eager.trace.size());
      for (std::size_t i = 0; i < lazy.trace.size(); ++i) {
        CHECK(lazy.trace[i].combined == eager.trace[i].combined);
      }
    }
    CoverageCapital cap(corpus);
    std::size_t previous = 0;
    for (NodeId v : {1u, 4u, 9u}) {
      cap.commit(v);
      CHECK(cap.covered_count() >= previous);
      previous = cap.covered_count();
    }
  }
}

TEST_CASE("selection is deterministic") {
  const auto inst = oracle::random_instance(77, {12, 24, 3, 4, 0.2, false});
  const auto ts = select_targets(inst->graph, TargetSpec::threshold(0.0));
  const auto corpus = generate_corpus(inst->graph, ts, DiffusionModel::ic, {500, 5});
  AttributeWiseDiversity a(inst->profiles), b(inst->profiles);
  const auto ra = build_seed_set(corpus, ts, a, {4, 0.5});
  const auto rb = build_seed_set(corpus, ts, b, {4, 0.5});
  CHECK(ra.seeds == rb.seeds);
  CHECK(ra.expected_capital == rb.expected_capital);
  CHECK(ra.diversity == rb.diversity);
}

TEST_CASE("objective arithmetic") {
  SeedResult r;
  r.expected_capital = 4.0;
  r.diversity = 2.0;
  r.total_score = 8.0;
  r.diversity_bound = 4.0;
  CHECK(objective_value(r, 1.0) == 4.0);
  CHECK(objective_value(r, 0.0) == 2.0);
  CHECK(objective_value(r, 0.5) == 3.0);
  CHECK(objective_value(r, 0.5, true) == 0.5);
}

TEST_CASE("modular capital") {
  ModularCapital m({3.0, 1.0});
  CHECK(m.gain(0) == 3.0);
  CHECK(m.scale() == 4.0);
  CHECK_THROWS_AS(ModularCapital({-1.0}), UsageError);
}

}  // TEST_SUITE

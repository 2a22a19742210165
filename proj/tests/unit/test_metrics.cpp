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
#include <cmath>
#include <sstream>
#include <vector>

#include "aditum/error.hpp"
#include "aditum/metrics.hpp"
#include "aditum/selector.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aditum;

namespace {

ProfileSet one_attribute(std::vector<std::size_t> indices, std::size_t domain) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < domain; ++i) labels.push_back(std::to_string(i));
  ProfileSet p(Schema({"A"}, {labels}), indices.size());
  for (NodeId v = 0; v < indices.size(); ++v) p.set(v, 0, indices[v]);
  return p;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("seed entropy with the coverage penalty") {
  const std::vector<NodeId> all{0, 1, 2, 3};
  CHECK(seed_entropy(all, one_attribute({0, 0, 0, 0}, 1)) == 0.0);
  CHECK(seed_entropy(all, one_attribute({0, 1, 0, 1}, 2)) == doctest::Approx(1.0));
  CHECK(seed_entropy(all, one_attribute({0, 1, 0, 1}, 4)) == doctest::Approx(0.5));
  ProfileSet blank(Schema({"A"}, {{"x"}}), 2);
  const std::vector<NodeId> two{0, 1};
  CHECK(seed_entropy(two, blank) == 0.0);
  CHECK_THROWS_AS(seed_entropy(std::vector<NodeId>{}, blank), UsageError);
}

TEST_CASE("seed entropy stays within its range") {
  const auto p = synth_profiles(60, std::vector<std::size_t>{4, 6, 3},
                                ValueDistribution::exponential, 6);
  StreamRng rng(2, StreamPurpose::test, 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NodeId> seeds;
    for (int i = 0; i < 5; ++i) seeds.push_back(static_cast<NodeId>(rng.below(60)));
    std::vector<char> present(p.schema().total_domain_size(), 0);
    for (NodeId v : seeds) {
      for (auto c : p.row(v)) present[static_cast<std::size_t>(c)] = 1;
    }
    const double distinct = static_cast<double>(std::count(present.begin(), present.end(), 1));
    const double e = seed_entropy(seeds, p);
    CHECK(e >= 0.0);
    CHECK(e <= std::log2(distinct) + 1e-12);
  }
}

TEST_CASE("seed overlap") {
  const std::vector<NodeId> a{1, 2, 3, 4}, b{3, 4, 5, 6}, c{7, 8, 9, 10};
  CHECK(seed_overlap(a, a, 4) == 1.0);
  CHECK(seed_overlap(a, c, 4) == 0.0);
  CHECK(seed_overlap(a, b, 4) == 0.5);
  CHECK(seed_overlap(b, a, 4) == seed_overlap(a, b, 4));
  CHECK_THROWS_AS(seed_overlap(a, std::vector<NodeId>{1, 2}, 4), UsageError);
}

TEST_CASE("class counts") {
  ClassAssignment c;
  c.class_of = {0, 0, 1, ClassAssignment::kUnassigned};
  c.reward.assign(4, 1.0);
  c.class_names = {"x", "y"};
  CHECK(class_count(std::vector<NodeId>{0, 1}, c) == 1);
  CHECK(class_count(std::vector<NodeId>{0, 2, 3}, c) == 2);
}

TEST_CASE("diversity curve against the theoretical maximum") {
  const auto p = synth_profiles(200, std::vector<std::size_t>{5, 5, 5},
                                ValueDistribution::uniform, 3);
  std::vector<CurvePoint> points;
  for (std::size_t k : {1u, 3u, 5u}) {
    AttributeWiseDiversity aw(p);
    std::vector<NodeId> seeds;
    for (std::size_t i = 0; i < k; ++i) {
      NodeId best = 0;
      double best_gain = -1.0;
      for (NodeId v = 0; v < 200; ++v) {
        if (!aw.committed(v) && aw.gain(v) > best_gain) {
          best = v;
          best_gain = aw.gain(v);
        }
      }
      aw.commit(best);
    }
    points.push_back({k, 0.0, aw.value()});
  }
  const auto rows = diversity_curve(points, p.schema(), 1.0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ratio == doctest::Approx(1.0));
  for (const auto& r : rows) {
    CHECK(r.ratio >= 0.95);
    CHECK(r.ratio <= 1.0 + 1e-12);
  }
  CHECK(diversity_curve(std::vector<CurvePoint>{}, p.schema(), 1.0).empty());
  std::ostringstream csv;
  write_curve_csv(csv, rows);
  CHECK(csv.str().rfind("k,alpha,diversity,div_max,ratio\n", 0) == 0);
}

TEST_CASE("metrics csv layout") {
  std::ostringstream out;
  write_metrics_header(out);
  CHECK(out.str() ==
        "dataset,diversity,k,alpha,target,master_seed,theta,seed_count,"
        "expected_capital,diversity_value,diversity_max,objective,"
        "seed_entropy,class_count,mc_capital,seeds\n");
  MetricsRow row;
  row.dataset = "toy";
  row.diversity = "aw";
  row.k = 2;
  row.alpha = 0.5;
  row.target = "top:100";
  row.master_seed = 7;
  row.theta = 10;
  row.seed_count = 2;
  row.seeds = "a b";
  std::ostringstream line;
  write_metrics_row(line, row);
  const std::string text = line.str();
  CHECK(std::count(text.begin(), text.end(), ',') == 15);
  CHECK(text.rfind("toy,aw,2,0.5,top:100,7,10,2,", 0) == 0);
}

}  // TEST_SUITE

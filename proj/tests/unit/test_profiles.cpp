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

#include <cmath>
#include <sstream>
#include <vector>

#include "aditum/error.hpp"
#include "aditum/profiles.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aditum;

namespace {

Schema abc_schema() {
  return Schema({"A1", "A2", "A3"},
                {{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}});
}

ProfileSet parse(const std::string& text, const Schema& schema) {
  std::istringstream in(text);
  return read_profiles(in, schema, nullptr);
}

NumericMatrix column(std::vector<double> values) {
  NumericMatrix m(values.size(), 1);
  m.data = std::move(values);
  return m;
}

std::vector<std::size_t> labels(const ProfileSet& p) {
  std::vector<std::size_t> out;
  for (NodeId v = 0; v < p.node_count(); ++v) {
    out.push_back(std::stoul(
        p.schema().value_label(0, static_cast<std::size_t>(p.cell(v, 0)))));
  }
  return out;
}

}  // namespace

TEST_SUITE("profiles") {

TEST_CASE("schema validation") {
  CHECK_THROWS_AS(Schema({}, {}), FormatError);
  CHECK_THROWS_AS(Schema({"A", "B"}, {{"x"}, {"y"}}, {0.7, 0.7}), FormatError);
  CHECK_THROWS_AS(Schema({"A"}, {{"x", "x"}}), FormatError);
  CHECK_THROWS_AS(Schema({"A", "A"}, {{"x"}, {"y"}}), FormatError);
  const Schema s({"A", "B"}, {{"1", "2"}, {"1", "2", "3"}});
  CHECK(s.weight(0) == 0.5);
  CHECK(s.total_domain_size() == 5);
  // Same label in two attributes qualifies to distinct values.
  CHECK(s.qualify(0, 0) != s.qualify(1, 0));
  CHECK(s.attribute_of(s.qualify(1, 2)) == 1);
}

TEST_CASE("sparse rows, empty rows and global counts") {
  const auto p = parse("A1,A2,A3\na1,,c2\n,,\na1,b2,c1\n", abc_schema());
  CHECK(p.length(0) == 2);
  CHECK(p.cell(0, 1) == ProfileSet::kMissing);
  CHECK(p.length(1) == 0);
  CHECK(p.global_count(p.schema().qualify(0, 0)) == 2);
  CHECK(p.total_value_count() == 5);
}

TEST_CASE("values outside the domain and unknown columns are rejected") {
  CHECK_THROWS_AS(parse("A1,A2,A3\na9,,\n", abc_schema()), FormatError);
  CHECK_THROWS_AS(parse("A1,Z\na1,\n", abc_schema()), FormatError);
  CHECK_THROWS_AS(parse("A1,A2,A3\na1,b1\n", abc_schema()), FormatError);
}

TEST_CASE("header order may differ from the schema order") {
  const auto p = parse("A3,A1\nc2,a1\n", abc_schema());
  CHECK(p.cell(0, 0) == static_cast<std::int32_t>(p.schema().qualify(0, 0)));
  CHECK(p.cell(0, 2) == static_cast<std::int32_t>(p.schema().qualify(2, 1)));
  CHECK(p.cell(0, 1) == ProfileSet::kMissing);
}

TEST_CASE("node column maps rows to graph labels") {
  const auto g = DiffusionGraph::from_edges(2, {{0, 1, 1.0}}, {"x", "y"});
  std::istringstream in("node,A1\ny,a2\nx,a1\n");
  const auto p = read_profiles(in, Schema({"A1"}, {{"a1", "a2"}}), &g);
  CHECK(p.cell(0, 0) == 0);
  CHECK(p.cell(1, 0) == 1);
  std::istringstream twice("node,A1\ny,a2\ny,a1\n");
  CHECK_THROWS_AS(read_profiles(twice, Schema({"A1"}, {{"a1", "a2"}}), &g),
                  FormatError);
}

TEST_CASE("schema files and inferred schemas") {
  std::istringstream in("color@0.25 red green\nsize@0.75 s m l\n");
  const Schema s = read_schema(in);
  CHECK(s.attribute_count() == 2);
  CHECK(s.weight(1) == 0.75);
  CHECK(s.domain_size(1) == 3);
  std::stringstream round;
  write_schema(round, s);
  const Schema back = read_schema(round);
  CHECK(back.weight(0) == 0.25);
  CHECK(back.value_label(1, 2) == "l");

  std::istringstream mixed("a@1 x\nb y\n");
  CHECK_THROWS_AS(read_schema(mixed), FormatError);

  std::istringstream csv("A,B\nx,\ny,z\n");
  const auto p = read_profiles_infer_schema(csv, nullptr);
  CHECK(p.schema().domain_size(0) == 2);
  CHECK(p.schema().domain_size(1) == 1);
}

TEST_CASE("write and reload preserves every profile") {
  const auto p = synth_profiles(200, std::vector<std::size_t>{3, 5, 2},
                                ValueDistribution::exponential, 4);
  ProfileSet sparse = p;
  for (NodeId v = 0; v < 200; v += 7) sparse.set(v, 1, std::nullopt);
  std::stringstream out;
  write_profiles(out, sparse, nullptr);
  const auto back = read_profiles(out, sparse.schema(), nullptr);
  CHECK(back == sparse);
  CHECK(back.total_value_count() == sparse.total_value_count());
}

TEST_CASE("uniform synthesis passes a chi-square test") {
  const std::size_t n = 20000;
  const std::vector<std::size_t> sizes(10, 10);
  const auto p = synth_profiles(n, sizes, ValueDistribution::uniform, 12);
  // 9 degrees of freedom; the 0.99 quantile is 21.67.
  for (std::size_t j = 0; j < 10; ++j) {
    double chi2 = 0.0;
    for (std::size_t x = 0; x < 10; ++x) {
      const double observed =
          static_cast<double>(p.global_count(p.schema().qualify(j, x)));
      const double expected = static_cast<double>(n) / 10.0;
      chi2 += (observed - expected) * (observed - expected) / expected;
    }
    CHECK(chi2 < 21.67);
  }
}

TEST_CASE("exponential synthesis follows the truncated geometric law") {
  const std::size_t n = 20000;
  const std::vector<std::size_t> sizes{5};
  const auto p = synth_profiles(n, sizes, ValueDistribution::exponential, 3);
  // P(index i) ∝ e^{-(i-1)} − e^{-i} for i = 1..5, renormalised.
  std::vector<double> prob(5);
  double z = 0.0;
  for (int i = 1; i <= 5; ++i) {
    prob[i - 1] = std::exp(-(i - 1.0)) - std::exp(-static_cast<double>(i));
    z += prob[i - 1];
  }
  double chi2 = 0.0;
  for (std::size_t x = 0; x < 5; ++x) {
    const double expected = static_cast<double>(n) * prob[x] / z;
    const double observed =
        static_cast<double>(p.global_count(p.schema().qualify(0, x)));
    chi2 += (observed - expected) * (observed - expected) / expected;
  }
  // 4 degrees of freedom; the 0.99 quantile is 13.28.
  CHECK(chi2 < 13.28);
}

TEST_CASE("synthesis edge cases and determinism") {
  const std::vector<std::size_t> one{1};
  const auto p = synth_profiles(50, one, ValueDistribution::exponential, 1);
  for (NodeId v = 0; v < 50; ++v) CHECK(p.cell(v, 0) == 0);
  const std::vector<std::size_t> sizes{4, 4};
  CHECK(synth_profiles(100, sizes, ValueDistribution::uniform, 8) ==
        synth_profiles(100, sizes, ValueDistribution::uniform, 8));
  CHECK_FALSE(synth_profiles(100, sizes, ValueDistribution::uniform, 8) ==
              synth_profiles(100, sizes, ValueDistribution::uniform, 9));
}

TEST_CASE("quantile binning") {
  CHECK(labels(quantile_discretize(column({1, 2, 3, 4}), 2)) ==
        std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(labels(quantile_discretize(column({7, 7, 7, 7, 7}), 4)) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(labels(quantile_discretize(column({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 10)) ==
        std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK_THROWS_AS(quantile_discretize(column({1, 2}), 1), UsageError);
  const double nan = std::nan("");
  CHECK_THROWS_AS(quantile_discretize(column({nan, nan}), 2), FormatError);
  const auto sparse = quantile_discretize(column({nan, 3, 1}), 2);
  CHECK(sparse.cell(0, 0) == ProfileSet::kMissing);
}

TEST_CASE("quantile labels are monotone in the value") {
  StreamRng rng(21, StreamPurpose::test, 0);
  std::vector<double> values(300);
  for (double& x : values) x = std::floor(rng.uniform() * 40.0);
  const auto p = quantile_discretize(column(values), 7);
  const auto l = labels(p);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[i] <= values[j]) CHECK(l[i] <= l[j]);
    }
  }
}

TEST_CASE("numeric preferences are row-max scaled") {
  NumericMatrix m(3, 2);
  m.data = {2, 4, 0, 0, 5, 0};
  const auto s = derive_numeric_preferences(m);
  CHECK(s.at(0, 0) == 0.5);
  CHECK(s.at(0, 1) == 1.0);
  CHECK(s.at(1, 0) == 0.0);
  CHECK(s.at(1, 1) == 0.0);
  CHECK(s.at(2, 0) == 1.0);
  NumericMatrix neg(1, 1);
  neg.data = {-1};
  CHECK_THROWS_AS(derive_numeric_preferences(neg), FormatError);
}

TEST_CASE("numeric CSV with and without header") {
  std::istringstream with("x,y\n1,2\n3,\n");
  const auto a = read_numeric_csv(with, nullptr);
  CHECK(a.cols == 2);
  CHECK(a.column_names[1] == "y");
  CHECK(std::isnan(a.at(1, 1)));
  std::istringstream without("1,2\n3,4\n");
  const auto b = read_numeric_csv(without, nullptr);
  CHECK(b.rows == 2);
  CHECK(b.at(1, 0) == 3);
}

TEST_CASE("class maps") {
  const auto g = DiffusionGraph::from_edges(3, {{0, 1, 1.0}}, {"x", "y", "z"});
  std::istringstream in("x red\ny blue 2.5\nz red\n");
  const auto c = read_class_map(in, g);
  CHECK(c.class_count() == 2);
  CHECK(c.class_of[0] == c.class_of[2]);
  CHECK(c.reward[1] == 2.5);
  CHECK(c.reward[0] == 1.0);
  std::istringstream bad("x red 0\n");
  CHECK_THROWS_AS(read_class_map(bad, g), FormatError);
  std::istringstream twice("x red\nx blue\n");
  CHECK_THROWS_AS(read_class_map(twice, g), FormatError);
}

TEST_CASE("classes derived from profiles respect the limit") {
  const auto p = synth_profiles(100, std::vector<std::size_t>{3, 3},
                                ValueDistribution::uniform, 2);
  const auto c = classes_from_profiles(p, 4);
  CHECK(c.class_count() <= 4);
  for (NodeId u = 0; u < 100; ++u) {
    CHECK(c.class_of[u] >= 0);
    for (NodeId v = 0; v < 100; ++v) {
      if (p.row(u)[0] == p.row(v)[0] && p.row(u)[1] == p.row(v)[1]) {
        CHECK(c.class_of[u] == c.class_of[v]);
      }
    }
  }
}

}  // TEST_SUITE

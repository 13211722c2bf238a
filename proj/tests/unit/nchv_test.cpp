// Copyright 2026 The tempctx Authors
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
#include <map>
#include <random>
#include <stdexcept>

#include "tempctx/contexts.hpp"
#include "tempctx/nchv.hpp"

using namespace tempctx;

namespace {

SignVariable var(const std::string& text) { return SignVariable::parse(text); }

ContextSet temporal_set() {
  return std::get<ContextSet>(build_temporal_contexts(PrecessionAngle::quarter_turns(0),
                                                      PrecessionAngle::quarter_turns(1)));
}

ContextSet spatial_set() {
  return build_spatial_contexts().with_eigenvalues_from(make_state(StateKind::singlet, 2));
}

// The temporal system written out by hand.
ConstraintSystem handwritten_temporal() {
  const auto mx1 = var("m_x^1"), mx2 = var("m_x^2"), my1 = var("m_y^1"), my2 = var("m_y^2");
  return ConstraintSystem({mx1, mx2, my1, my2},
                          {{{mx2, my1}, Sign::minus()},
                           {{my2, mx1}, Sign::plus()},
                           {{mx2, my2, my1, mx1}, Sign::plus()}});
}

// Independent evaluation: product of looked-up values.
bool oracle_satisfies(const ConstraintSystem& sys, const std::map<std::string, int>& values) {
  for (const auto& c : sys.constraints()) {
    int prod = 1;
    for (const auto& v : c.variables) prod *= values.at(v.name());
    if (prod != c.required.value()) return false;
  }
  return true;
}

// Brute force without bit tricks: recursive sign choice per variable.
void brute(const ConstraintSystem& sys, std::size_t i, std::map<std::string, int>& values,
           int& count) {
  if (i == sys.variables().size()) {
    count += oracle_satisfies(sys, values) ? 1 : 0;
    return;
  }
  for (const int s : {1, -1}) {
    values[sys.variables()[i].name()] = s;
    brute(sys, i + 1, values, count);
  }
}

int brute_count(const ConstraintSystem& sys) {
  std::map<std::string, int> values;
  int count = 0;
  brute(sys, 0, values, count);
  return count;
}

ConstraintSystem random_system(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> nvars(1, 10);
  std::uniform_int_distribution<int> ncons(1, 8);
  const int n = nvars(gen);
  std::vector<SignVariable> vars;
  for (int i = 0; i < n; ++i) vars.push_back({"q", 'x', i + 1});
  std::vector<MonomialConstraint> cons;
  const int m = ncons(gen);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < m; ++k) {
    std::vector<SignVariable> vs;
    for (int i = 0; i < n; ++i) {
      if (coin(gen)) vs.push_back(vars[i]);
    }
    if (vs.empty()) vs.push_back(vars[pick(gen)]);
    cons.push_back({vs, coin(gen) ? Sign::plus() : Sign::minus()});
  }
  return ConstraintSystem(vars, cons);
}

}  // namespace

TEST(SignVariableTest, ParseAndName) {
  const auto v = var("m_x^2");
  EXPECT_EQ(v.family, "m");
  EXPECT_EQ(v.axis, 'x');
  EXPECT_EQ(v.slot, 2);
  EXPECT_EQ(v.name(), "m_x^2");
  EXPECT_THROW(var("m_w^1"), std::invalid_argument);
  EXPECT_THROW(var("m_x^0"), std::invalid_argument);
  EXPECT_THROW(var("mx1"), std::invalid_argument);
}

TEST(ConstraintSystemTest, Validation) {
  const auto a = var("m_x^1");
  const auto b = var("m_y^1");
  EXPECT_THROW(ConstraintSystem({a, a}, {}), std::invalid_argument);
  EXPECT_THROW(ConstraintSystem({a}, {{{b}, Sign::plus()}}), std::invalid_argument);
  EXPECT_THROW(ConstraintSystem({a}, {{{a, a}, Sign::plus()}}), std::invalid_argument);
  EXPECT_THROW(ConstraintSystem({a}, {{{}, Sign::plus()}}), std::invalid_argument);
}

TEST(ConstraintSystemTest, FromTemporalContexts) {
  const auto sys = constraints_from_contexts(temporal_set());
  const auto hand = handwritten_temporal();
  ASSERT_EQ(sys.constraints().size(), 3u);
  ASSERT_EQ(sys.variables().size(), 4u);
  for (std::size_t i = 0; i < 3; ++i) {
    auto got = sys.constraints()[i].variables;
    auto want = hand.constraints()[i].variables;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << i;
    EXPECT_EQ(sys.constraints()[i].required, hand.constraints()[i].required) << i;
  }
}

TEST(ConstraintSystemTest, FromSpatialContexts) {
  const auto sys = constraints_from_contexts(spatial_set());
  ASSERT_EQ(sys.constraints().size(), 3u);
  for (const auto& c : sys.constraints()) {
    EXPECT_EQ(c.required, Sign::minus());
    for (const auto& v : c.variables) EXPECT_EQ(v.family, "v");
  }
  EXPECT_EQ(sys.constraints()[2].variables.size(), 4u);
  EXPECT_THROW(constraints_from_contexts(build_spatial_contexts()), std::invalid_argument);
}

TEST(ConstraintSystemTest, JsonRoundTrip) {
  const auto sys = handwritten_temporal();
  const auto again = ConstraintSystem::from_json(sys.to_json());
  EXPECT_EQ(again.to_json(), sys.to_json());
  EXPECT_THROW(ConstraintSystem::from_json("{"), std::invalid_argument);
  EXPECT_THROW(ConstraintSystem::from_json(R"({"variables": ["m_x^1"],
      "constraints": [{"vars": ["m_x^1"], "sign": 2}]})"),
               std::invalid_argument);
}

TEST(EnumerationTest, ContextSystemsAreUnsatisfiable) {
  EXPECT_TRUE(enumerate_assignments(handwritten_temporal()).empty());
  EXPECT_TRUE(enumerate_assignments(constraints_from_contexts(spatial_set())).empty());
  EXPECT_EQ(brute_count(handwritten_temporal()), 0);
  EXPECT_EQ(brute_count(constraints_from_contexts(spatial_set())), 0);
}

TEST(EnumerationTest, RelaxedSystemHasFourSolutions) {
  const auto relaxed = handwritten_temporal().without_constraint(2);
  const auto sols = enumerate_assignments(relaxed);
  ASSERT_EQ(sols.size(), 4u);
  EXPECT_EQ(brute_count(relaxed), 4);
  const auto mx1 = relaxed.index_of(var("m_x^1"));
  const auto mx2 = relaxed.index_of(var("m_x^2"));
  const auto my1 = relaxed.index_of(var("m_y^1"));
  const auto my2 = relaxed.index_of(var("m_y^2"));
  for (const auto& a : sols) {
    EXPECT_EQ(a.value(mx2), -a.value(my1));
    EXPECT_EQ(a.value(my2), a.value(mx1));
  }
}

TEST(EnumerationTest, LexicographicOrderPlusFirst) {
  const auto a = var("m_x^1");
  const auto b = var("m_x^2");
  const ConstraintSystem free({a, b}, {});
  const auto all = enumerate_assignments(free);
  ASSERT_EQ(all.size(), 4u);
  // (+,+), (+,-), (-,+), (-,-)
  EXPECT_EQ(all[0].value(0), Sign::plus());
  EXPECT_EQ(all[0].value(1), Sign::plus());
  EXPECT_EQ(all[1].value(0), Sign::plus());
  EXPECT_EQ(all[1].value(1), Sign::minus());
  EXPECT_EQ(all[2].value(0), Sign::minus());
  EXPECT_EQ(all[3].value(1), Sign::minus());
}

TEST(EnumerationTest, CapacityBound) {
  std::vector<SignVariable> vars;
  for (int i = 0; i < 25; ++i) vars.push_back({"q", 'z', i + 1});
  const ConstraintSystem big(vars, {});
  EXPECT_THROW(enumerate_assignments(big), CapacityError);
}

TEST(CertificateTest, ContextSystems) {
  for (const auto& sys : {handwritten_temporal(), constraints_from_contexts(spatial_set())}) {
    const auto cert = parity_certificate(sys);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cert->constraint_subset, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(cert->parity_of_signs, Sign::minus());
    EXPECT_TRUE(cert->minimal);
    EXPECT_TRUE(verify_certificate(sys, *cert));
  }
}

TEST(CertificateTest, SingleConstraintHasNone) {
  const ConstraintSystem sys({var("m_x^1"), var("m_x^2")},
                             {{{var("m_x^1"), var("m_x^2")}, Sign::plus()}});
  EXPECT_FALSE(parity_certificate(sys).has_value());
}

TEST(CertificateTest, MinimalityUnderSignFlips) {
  for (const auto& sys : {handwritten_temporal(), constraints_from_contexts(spatial_set())}) {
    for (std::size_t i = 0; i < sys.constraints().size(); ++i) {
      const auto flipped = sys.with_flipped_sign(i);
      EXPECT_GT(brute_count(flipped), 0);
      const auto report = cross_check(flipped);
      EXPECT_TRUE(report.satisfiable());
      EXPECT_FALSE(report.certificate.has_value());
    }
  }
}

TEST(CertificateTest, PicksSmallestLexicographicSubset) {
  const auto a = var("m_x^1");
  const auto b = var("m_y^1");
  // {0,1,2} and {3,4} are both contradictions; the pair wins.
  const ConstraintSystem sys({a, b}, {{{a}, Sign::plus()},
                                      {{b}, Sign::plus()},
                                      {{a, b}, Sign::minus()},
                                      {{a}, Sign::plus()},
                                      {{a}, Sign::minus()}});
  const auto cert = parity_certificate(sys);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->constraint_subset, (std::vector<std::size_t>{0, 4}));
}

TEST(CrossCheckTest, FuzzAgreesWithBruteForce) {
  std::mt19937_64 gen(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sys = random_system(gen);
    const auto sols = enumerate_assignments(sys);
    ASSERT_EQ(static_cast<int>(sols.size()), brute_count(sys));
    for (const auto& a : sols) {
      std::map<std::string, int> values;
      for (std::size_t i = 0; i < sys.variables().size(); ++i) {
        values[sys.variables()[i].name()] = a.value(i).value();
      }
      ASSERT_TRUE(oracle_satisfies(sys, values));
    }
    const auto report = cross_check(sys);
    if (report.certificate) {
      ASSERT_TRUE(verify_certificate(sys, *report.certificate));
      ASSERT_TRUE(sols.empty());
    }
    ASSERT_EQ(report.satisfiable(), !sols.empty());
  }
}

TEST(CrossCheckTest, ContextSystemsAgree) {
  const auto report = cross_check(handwritten_temporal());
  EXPECT_EQ(report.satisfying_assignments, 0u);
  EXPECT_TRUE(report.certificate.has_value());
}

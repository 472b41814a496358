// Copyright 2026 The oppmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oppmodel/predictors.h"

#include <random>

#include "doctest.h"
#include "oppmodel/sim.h"
#include "oracles.h"

namespace oppmodel {
namespace {

JointAction J(const char* label) { return ParseJointAction(label); }

// Models whose action table is the only thing predictors read.
ConditionalModels ActionModels(const std::vector<double>& p_cooperate) {
  const int n = static_cast<int>(p_cooperate.size());
  ConditionalModels m = ConditionalModels::Zeros(n, Role::kRow);
  for (int s = 0; s < n; ++s) {
    m.action_emission(s, 0) = p_cooperate[s];
    m.action_emission(s, 1) = 1.0 - p_cooperate[s];
  }
  return m;
}

BeliefState Bel(std::initializer_list<double> probs) {
  Eigen::VectorXd v(probs.size());
  int i = 0;
  for (double p : probs) v(i++) = p;
  return {v, BeliefPhase::kInterim};
}

// leader-pure-CC (3 states), leader-alternating-AC-BC (4), follower-pure-CC (2).
std::vector<ExpertFsm> MixedRoster() {
  const auto full = BuildExpertRoster(PrisonersDilemma());
  return {full[0], full[1], full[3]};
}

TEST_CASE("action MAP sums over all states") {
  ConditionalModels one = ActionModels({1.0});
  Prediction p = PredictActionMap(Bel({1.0}), one);
  CHECK(p.action() == Move::kCooperate);
  CHECK(p.confidence == doctest::Approx(1.0));
  CHECK(p.method == PredictionMethod::kMap);

  ConditionalModels two = ActionModels({1.0, 0.0});
  p = PredictActionMap(Bel({0.7, 0.3}), two);
  CHECK(p.action() == Move::kCooperate);
  CHECK(p.confidence == doctest::Approx(0.7));

  // Ties go to cooperate.
  p = PredictActionMap(Bel({0.5, 0.5}), two);
  CHECK(p.action() == Move::kCooperate);
}

TEST_CASE("action MAP matches an exhaustive sum on the compiled model") {
  const auto roster = BuildExpertRoster(PrisonersDilemma());
  const StateSpace space(roster);
  ConditionalModels m = BuildModels(roster, PrisonersDilemma(), 0.02);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    BeliefState bel{testing::RandomDistribution(space.size(), rng), BeliefPhase::kInterim};
    double c = 0.0;
    double d = 0.0;
    for (int s = 0; s < space.size(); ++s) {
      c += bel.probs(s) * m.action_emission(s, 0);
      d += bel.probs(s) * m.action_emission(s, 1);
    }
    Prediction p = PredictActionMap(bel, m);
    CHECK(p.action() == (c >= d ? Move::kCooperate : Move::kDefect));
    CHECK(p.confidence == doctest::Approx(std::max(c, d)).epsilon(1e-12));
  }
}

TEST_CASE("aggregation follows the heaviest expert") {
  StateSpace space = StateSpace::Synthetic({1, 1});
  ConditionalModels m = ActionModels({1.0, 0.0});
  Prediction p = PredictActionAgg(Bel({0.6, 0.4}), space, m);
  CHECK(p.action() == Move::kCooperate);
  CHECK(p.method == PredictionMethod::kAggregation);

  // Expert A holds 0.4 and cooperates; B and C hold 0.3 each and defect.
  StateSpace three = StateSpace::Synthetic({1, 1, 1});
  ConditionalModels m3 = ActionModels({1.0, 0.0, 0.0});
  BeliefState split = Bel({0.4, 0.3, 0.3});
  CHECK(PredictActionAgg(split, three, m3).action() == Move::kCooperate);
  CHECK(PredictActionAgg(split, three, m3).confidence == doctest::Approx(1.0));
  CHECK(PredictActionMap(split, m3).action() == Move::kDefect);
  CHECK(PredictActionMap(split, m3).confidence == doctest::Approx(0.6));
}

TEST_CASE("aggregation confidence is conditional on the chosen expert") {
  StateSpace space = StateSpace::Synthetic({2, 1});
  ConditionalModels m = ActionModels({1.0, 0.0, 0.0});
  Prediction p = PredictActionAgg(Bel({0.45, 0.15, 0.4}), space, m);
  CHECK(p.action() == Move::kCooperate);
  CHECK(p.confidence == doctest::Approx(0.75));
}

TEST_CASE("plan predictors") {
  const auto roster = MixedRoster();
  const StateSpace space(roster);
  REQUIRE(space.size() == 9);
  auto belief = [&](double a, double b, double c) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(9);
    v(0) = a;
    v(3) = b;
    v(7) = c;
    return BeliefState{v, BeliefPhase::kInterim};
  };
  BeliefState leader_only = belief(1.0, 0.0, 0.0);
  CHECK(PredictPlanMap(leader_only, space).plan() == PlanType::kLeader);
  CHECK(PredictPlanAgg(leader_only, space).plan() == PlanType::kLeader);

  BeliefState mostly_leader = belief(0.55, 0.0, 0.45);
  CHECK(PredictPlanMap(mostly_leader, space).plan() == PlanType::kLeader);
  CHECK(PredictPlanMap(mostly_leader, space).confidence == doctest::Approx(0.55));
  CHECK(PredictPlanAgg(mostly_leader, space).plan() == PlanType::kLeader);

  BeliefState split = belief(0.3, 0.3, 0.4);
  CHECK(PredictPlanMap(split, space).plan() == PlanType::kFollower);
  CHECK(PredictPlanMap(split, space).confidence == doctest::Approx(0.4));
  CHECK(PredictPlanAgg(split, space).plan() == PlanType::kLeader);
  CHECK(PredictPlanAgg(split, space).confidence == doctest::Approx(0.6));
}

TEST_CASE("intent predictors") {
  const auto full = BuildExpertRoster(PrisonersDilemma());
  std::vector<ExpertFsm> roster = {
      full[0], MakeLeader("fair", PrisonersDilemma(), Role::kRow, {J("AC"), J("BC")},
                          IntentType::kMaximizeFairness)};
  const StateSpace space(roster);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(space.size());
  v(3) = 1.0;
  BeliefState fair{v, BeliefPhase::kInterim};
  CHECK(PredictIntentMap(fair, space).intent() == IntentType::kMaximizeFairness);
  CHECK(PredictIntentAgg(fair, space).intent() == IntentType::kMaximizeFairness);

  v.setZero();
  v(0) = 0.45;
  v(3) = 0.3;
  v(4) = 0.25;
  BeliefState majority{v, BeliefPhase::kInterim};
  CHECK(PredictIntentAgg(majority, space).intent() == IntentType::kMaximizeFairness);

  const StateSpace pd(full);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    BeliefState bel{testing::RandomDistribution(pd.size(), rng), BeliefPhase::kInterim};
    CHECK(PredictIntentMap(bel, pd).intent() == IntentType::kMaximizePayoff);
    CHECK(PredictIntentAgg(bel, pd).intent() == IntentType::kMaximizePayoff);
  }
}

TEST_CASE("predictor properties on random beliefs") {
  const auto roster = BuildExpertRoster(PrisonersDilemma());
  const StateSpace space(roster);
  ConditionalModels m = BuildModels(roster, PrisonersDilemma(), 0.02);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    BeliefState bel{testing::RandomDistribution(space.size(), rng), BeliefPhase::kInterim};
    const std::vector<Prediction> all = {
        PredictActionMap(bel, m),     PredictActionAgg(bel, space, m),
        PredictPlanMap(bel, space),   PredictPlanAgg(bel, space),
        PredictIntentMap(bel, space), PredictIntentAgg(bel, space)};
    for (const Prediction& p : all) {
      CHECK(p.confidence >= 0.0);
      CHECK(p.confidence <= 1.0 + 1e-12);
    }
    CHECK(all[0].confidence >= 0.5);

    // Scaling before normalization leaves every value unchanged.
    const double c = 0.1 + 10.0 * testing::Unit(rng);
    Eigen::VectorXd scaled = bel.probs * c;
    BeliefState again{scaled / scaled.sum(), BeliefPhase::kInterim};
    CHECK(PredictActionMap(again, m).value == all[0].value);
    CHECK(PredictActionAgg(again, space, m).value == all[1].value);
    CHECK(PredictPlanMap(again, space).value == all[2].value);
    CHECK(PredictPlanAgg(again, space).value == all[3].value);

    // Mass confined to one expert: both methods agree.
    const int j = static_cast<int>(rng() % space.num_experts());
    Eigen::VectorXd inside = Eigen::VectorXd::Zero(space.size());
    const auto& e = space.expert(j);
    inside.segment(e.first, e.size) = bel.probs.segment(e.first, e.size);
    BeliefState one{inside / inside.sum(), BeliefPhase::kInterim};
    CHECK(PredictActionMap(one, m).value == PredictActionAgg(one, space, m).value);
    CHECK(PredictPlanMap(one, space).value == PredictPlanAgg(one, space).value);
    CHECK(PredictIntentMap(one, space).value == PredictIntentAgg(one, space).value);
  }
}

TEST_CASE("expert ties go to the lowest index") {
  StateSpace space = StateSpace::Synthetic({1, 1});
  ConditionalModels m = ActionModels({0.0, 1.0});
  CHECK(PredictActionAgg(Bel({0.5, 0.5}), space, m).action() == Move::kDefect);
  Eigen::VectorXd masses = ExpertMasses(Bel({0.5, 0.5}), space);
  CHECK(masses(0) == doctest::Approx(0.5));
}

TEST_CASE("value labels") {
  Prediction p{PredictionKind::kAction, Move::kDefect, 0.9, PredictionMethod::kMap};
  CHECK(p.ValueLabel(Role::kColumn) == "D");
  CHECK(p.ValueLabel(Role::kRow) == "B");
  CHECK(MethodName(PredictionMethod::kAggregation) == "agg");
}

}  // namespace
}  // namespace oppmodel

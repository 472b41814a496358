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

#include <stdexcept>

namespace oppmodel {
namespace {

int ArgmaxLowest(const Eigen::VectorXd& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i) {
    if (v(i) > v(best)) best = i;
  }
  return best;
}

void CheckSize(const BeliefState& bel, int n) {
  if (bel.probs.size() != n) {
    throw std::invalid_argument("belief size does not match the state space");
  }
}

template <typename Type, typename Attr>
Prediction TypeMap(const BeliefState& bel, const StateSpace& space,
                   PredictionKind kind, Attr attr) {
  Eigen::VectorXd masses = ExpertMasses(bel, space);
  int j = ArgmaxLowest(masses);
  return {kind, attr(space.expert(j)), masses(j), PredictionMethod::kMap};
}

// `first` wins ties.
template <typename Type, typename Attr>
Prediction TypeAgg(const BeliefState& bel, const StateSpace& space,
                   PredictionKind kind, Type first, Type second, Attr attr) {
  Eigen::VectorXd masses = ExpertMasses(bel, space);
  double a = 0.0;
  double b = 0.0;
  for (int j = 0; j < space.num_experts(); ++j) {
    (attr(space.expert(j)) == first ? a : b) += masses(j);
  }
  if (b > a) return {kind, second, b, PredictionMethod::kAggregation};
  return {kind, first, a, PredictionMethod::kAggregation};
}

}  // namespace

std::string MethodName(PredictionMethod method) {
  return method == PredictionMethod::kMap ? "map" : "agg";
}

std::string Prediction::ValueLabel(Role modeled) const {
  switch (kind) {
    case PredictionKind::kAction:
      return std::string(1, ActionId{modeled, action()}.Label());
    case PredictionKind::kPlan:
      return PlanTypeName(plan());
    case PredictionKind::kIntent:
      return IntentTypeName(intent());
  }
  return "";
}

Eigen::VectorXd ExpertMasses(const BeliefState& bel, const StateSpace& space) {
  CheckSize(bel, space.size());
  Eigen::VectorXd masses = Eigen::VectorXd::Zero(space.num_experts());
  for (int s = 0; s < space.size(); ++s) masses(space.ExpertOf(s)) += bel.probs(s);
  return masses;
}

Prediction PredictActionMap(const BeliefState& bel,
                            const ConditionalModels& models) {
  CheckSize(bel, models.num_states);
  Eigen::Vector2d sums = models.action_emission.transpose() * bel.probs;
  Move move = sums(1) > sums(0) ? Move::kDefect : Move::kCooperate;
  return {PredictionKind::kAction, move, sums(static_cast<int>(move)),
          PredictionMethod::kMap};
}

Prediction PredictActionAgg(const BeliefState& bel, const StateSpace& space,
                            const ConditionalModels& models) {
  CheckSize(bel, models.num_states);
  Eigen::VectorXd masses = ExpertMasses(bel, space);
  const int j = ArgmaxLowest(masses);
  const StateSpace::ExpertInfo& e = space.expert(j);
  Eigen::Vector2d sums =
      models.action_emission.middleRows(e.first, e.size).transpose() *
      bel.probs.segment(e.first, e.size);
  Move move = sums(1) > sums(0) ? Move::kDefect : Move::kCooperate;
  double confidence =
      masses(j) > 0.0 ? sums(static_cast<int>(move)) / masses(j) : 0.0;
  return {PredictionKind::kAction, move, confidence,
          PredictionMethod::kAggregation};
}

Prediction PredictPlanMap(const BeliefState& bel, const StateSpace& space) {
  return TypeMap<PlanType>(bel, space, PredictionKind::kPlan,
                           [](const StateSpace::ExpertInfo& e) { return e.plan_type; });
}

Prediction PredictPlanAgg(const BeliefState& bel, const StateSpace& space) {
  return TypeAgg(bel, space, PredictionKind::kPlan, PlanType::kLeader,
                 PlanType::kFollower,
                 [](const StateSpace::ExpertInfo& e) { return e.plan_type; });
}

Prediction PredictIntentMap(const BeliefState& bel, const StateSpace& space) {
  return TypeMap<IntentType>(bel, space, PredictionKind::kIntent,
                             [](const StateSpace::ExpertInfo& e) { return e.intent_type; });
}

Prediction PredictIntentAgg(const BeliefState& bel, const StateSpace& space) {
  return TypeAgg(bel, space, PredictionKind::kIntent,
                 IntentType::kMaximizePayoff, IntentType::kMaximizeFairness,
                 [](const StateSpace::ExpertInfo& e) { return e.intent_type; });
}

}  // namespace oppmodel

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

#ifndef OPPMODEL_PREDICTORS_H_
#define OPPMODEL_PREDICTORS_H_

#include <string>
#include <variant>

#include "oppmodel/belief.h"
#include "oppmodel/experts.h"
#include "oppmodel/game.h"

namespace oppmodel {

enum class PredictionKind { kAction, kPlan, kIntent };
enum class PredictionMethod { kMap, kAggregation };

std::string MethodName(PredictionMethod method);

struct Prediction {
  PredictionKind kind;
  std::variant<Move, PlanType, IntentType> value;
  double confidence = 0.0;
  PredictionMethod method;

  Move action() const { return std::get<Move>(value); }
  PlanType plan() const { return std::get<PlanType>(value); }
  IntentType intent() const { return std::get<IntentType>(value); }
  std::string ValueLabel(Role modeled) const;
};

// Ties go to Cooperate, to the lowest expert index, to Leader and to
// MaximizePayoff.

// argmax_a sum_s P(s) P(a|s) over the whole state space.
Prediction PredictActionMap(const BeliefState& bel,
                            const ConditionalModels& models);
// Same sum restricted to the most probable expert, reported conditional on
// that expert.
Prediction PredictActionAgg(const BeliefState& bel, const StateSpace& space,
                            const ConditionalModels& models);

Prediction PredictPlanMap(const BeliefState& bel, const StateSpace& space);
Prediction PredictPlanAgg(const BeliefState& bel, const StateSpace& space);
Prediction PredictIntentMap(const BeliefState& bel, const StateSpace& space);
Prediction PredictIntentAgg(const BeliefState& bel, const StateSpace& space);

// Posterior mass of each expert.
Eigen::VectorXd ExpertMasses(const BeliefState& bel, const StateSpace& space);

}  // namespace oppmodel

#endif  // OPPMODEL_PREDICTORS_H_

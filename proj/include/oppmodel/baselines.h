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

#ifndef OPPMODEL_BASELINES_H_
#define OPPMODEL_BASELINES_H_

#include <string>
#include <vector>

#include "oppmodel/game.h"

namespace oppmodel {

// The 21 fixed Prisoner's Dilemma strategies used as comparison predictors.
enum class StrategyId {
  kAlwaysCooperate,
  kTFT,
  kTF2T,
  kTF3T,
  kTwoTitsForOneTat,
  kTwoTitsForTwoTats,
  kT2,
  kGrim,
  kLenientGrim2,
  kLenientGrim3,
  kWSLS,
  kPerfectTFT2,
  kAlwaysDefect,
  kFalseCooperator,
  kExplTFT,
  kExplTF2T,
  kExplTF3T,
  kExplGrim2,
  kExplGrim3,
  kAlternator,
  kPavlov,
};

inline constexpr int kNumStrategies = 21;

const std::vector<StrategyId>& AllStrategies();
// Stable identifiers used on the command line and in reports.
std::string StrategyName(StrategyId id);
StrategyId ParseStrategy(const std::string& name);

// Strategies whose decision depends on more than the last three rounds.
bool HasUnboundedMemory(StrategyId id);

// Next move of `id` given the history as (own move, partner move) pairs.
Move StrategyMove(StrategyId id, const std::vector<std::pair<Move, Move>>& history);

// Next action of `id` sitting at `role` given the shared joint history.
ActionId StrategyNextAction(StrategyId id, const std::vector<JointAction>& history,
                            Role role = Role::kRow);

// Predicts the modeled player's next action as what `id` would play in its
// seat.
ActionId BaselinePredict(StrategyId id, const std::vector<JointAction>& history,
                         Role modeled);

}  // namespace oppmodel

#endif  // OPPMODEL_BASELINES_H_

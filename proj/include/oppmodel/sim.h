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

#ifndef OPPMODEL_SIM_H_
#define OPPMODEL_SIM_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oppmodel/baselines.h"
#include "oppmodel/interaction_log.h"
#include "oppmodel/sharp_agent.h"

namespace oppmodel {

struct SharpLikeSpec {
  SharpAgentConfig config;
};

struct FixedSpec {
  StrategyId strategy;
};

struct ReplaySpec {
  InteractionLog log;
  Role role = Role::kRow;
};

struct AgentSpec {
  std::variant<SharpLikeSpec, FixedSpec, ReplaySpec> kind;
  double lie_prob = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;

  static AgentSpec SharpLike(SharpAgentConfig config, double lie_prob = 0.0,
                             std::uint64_t seed = 0);
  static AgentSpec Fixed(StrategyId strategy, std::uint64_t seed = 0);
  static AgentSpec Replay(InteractionLog log, Role role);

  std::string Describe() const;
};

struct SimConfig {
  int rounds = 51;
  int games = 12;
  bool cheap_talk = true;
  std::uint64_t seed = 0;

  void Validate() const;
};

// Plays one match. Each round both seats speak (Silence without cheap talk),
// then both act without seeing the other's action. Throws
// std::invalid_argument when a replayed log is shorter than config.rounds.
InteractionLog RunGame(const AgentSpec& row, const AgentSpec& col,
                       const SimConfig& config,
                       const std::string& game_id = "g000");

// Liar's action: when `speech` proposes a play, contradict this seat's part of
// it with probability `lie_prob`, else comply. Pass-through otherwise.
ActionId ApplyLie(const SpeechAct& speech, ActionId action, double lie_prob,
                  std::mt19937_64& rng);

// One game per matchup, seeds derived from config.seed and the index.
std::vector<InteractionLog> GenerateCorpus(
    const SimConfig& config,
    const std::vector<std::pair<AgentSpec, AgentSpec>>& matchups);

// `config.games` matchups: a reference agent in the row seat against fixed
// strategies drawn without replacement (cycling through all 21) in an order
// fixed by config.seed.
std::vector<std::pair<AgentSpec, AgentSpec>> DefaultMatchups(
    const SimConfig& config, double lie_prob = 0.0);

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index);

namespace internal {
// Evaluation-order hook for the simultaneity check.
InteractionLog RunGameOrdered(const AgentSpec& row, const AgentSpec& col,
                              const SimConfig& config, const std::string& game_id,
                              bool column_first);
}  // namespace internal

}  // namespace oppmodel

#endif  // OPPMODEL_SIM_H_

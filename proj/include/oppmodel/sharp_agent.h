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

#ifndef OPPMODEL_SHARP_AGENT_H_
#define OPPMODEL_SHARP_AGENT_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "oppmodel/experts.h"
#include "oppmodel/game.h"
#include "oppmodel/interaction_log.h"
#include "oppmodel/speech.h"

namespace oppmodel {

struct SharpAgentConfig {
  double aspiration = 0.0;        // points per round
  double aspiration_decay = 0.9;  // in (0, 1]
  std::vector<ExpertFsm> roster;
  bool honor_congruence = true;

  void Validate() const;  // Throws std::invalid_argument.
};

SharpAgentConfig DefaultSharpConfig(const MatrixGame& game, Role role);

// Punishment never lasts longer than this many rounds.
inline constexpr int kMaxPunishRounds = 5;

// Simplified expert-selecting reference agent. Each round it (re)selects an
// expert at round start, speaks from that expert's current state, reacts to
// the partner's speech, acts, and finally observes the joint outcome.
//
// Selection: experts whose potential meets the aspiration level are
// eligible; when congruence is honored and the partner has proposed a plan,
// eligible experts carrying that plan are preferred. Among the remaining
// candidates the highest potential wins, then the lowest index. With nobody
// eligible the agent falls back to the highest potential overall.
//
// Potentials start at each expert's compliant per-round payoff and the
// active expert's potential tracks its realized payoff with the aspiration
// decay; the aspiration itself is a moving average of realized payoff.
// Followers whose plan the partner has not proposed are valued at the game's
// maximin payoff.
class SharpAgent {
 public:
  SharpAgent(SharpAgentConfig config, MatrixGame game, Role role,
             std::uint64_t seed);

  SpeechAct Speak();
  ActionId Act(const SpeechAct& partner_speech);
  void Observe(const RoundRecord& round);

  const SharpAgentConfig& config() const { return config_; }
  Role role() const { return role_; }
  int active_expert() const { return active_; }
  int state() const { return state_; }
  const std::vector<double>& potentials() const { return potentials_; }
  const std::optional<PlanCycle>& partner_last_proposal() const {
    return partner_proposal_;
  }

  // Candidate experts for the next selection (before the argmax).
  std::vector<int> Candidates() const;
  double EffectivePotential(int expert) const;

 private:
  enum class Phase { kSpeak, kAct, kObserve };

  int Select() const;
  double Uniform();

  SharpAgentConfig config_;
  MatrixGame game_;
  Role role_;
  std::mt19937_64 rng_;
  Phase phase_ = Phase::kSpeak;
  int active_ = -1;
  int state_ = 0;
  std::vector<double> potentials_;
  std::optional<PlanCycle> partner_proposal_;

  // Punishment bookkeeping: partner's payoff surplus over the compliant
  // counterfactual since the deviation, the plan step the counterfactual is
  // at, and rounds punished so far.
  double debt_ = 0.0;
  int cf_step_ = 0;
  int punished_rounds_ = 0;
};

struct SharpStep {
  SpeechAct speech;
  ActionId action;
  SharpAgentConfig config;
  int expert = -1;
};

// Replays `history` through a fresh agent seated at `role`, then produces
// the next round's speech and action (reacting to `partner_speech`).
SharpStep SharpAgentStep(const SharpAgentConfig& config, const MatrixGame& game,
                         Role role, const InteractionLog& history,
                         std::uint64_t seed,
                         const SpeechAct& partner_speech = SpeechAct());

// Active expert of a reference agent seated at `role`, per round of `log`.
std::vector<int> TraceExperts(const SharpAgentConfig& config,
                              const InteractionLog& log, Role role,
                              std::uint64_t seed = 0);

}  // namespace oppmodel

#endif  // OPPMODEL_SHARP_AGENT_H_

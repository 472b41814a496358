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

#ifndef OPPMODEL_EXPERTS_H_
#define OPPMODEL_EXPERTS_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "oppmodel/game.h"
#include "oppmodel/speech.h"

namespace oppmodel {

enum class PlanType { kLeader, kFollower };
enum class IntentType { kMaximizePayoff, kMaximizeFairness };

std::string PlanTypeName(PlanType type);
std::string IntentTypeName(IntentType type);

// Things that move an expert's state machine.
struct GameEvent {
  enum class Kind {
    kRoundStart,
    kPartnerProposed,
    kPartnerComplied,
    kPartnerDeviated,
    kPunishmentSatisfied,
    kSelfDeviated,
  };

  Kind kind = Kind::kRoundStart;
  SpeechAct proposal;  // Set for kPartnerProposed.

  static GameEvent Of(Kind kind) { return {kind, {}}; }
  static GameEvent Proposed(SpeechAct proposal) {
    return {Kind::kPartnerProposed, std::move(proposal)};
  }
  std::string ToString() const;
};

enum class StateKind { kOffer, kCooperate, kPunish, kAccept, kBestRespond, kMaximin };

struct SpeechEmission {
  SpeechAct speech;
  double prob = 1.0;
};

struct FsmState {
  std::string name;
  StateKind kind = StateKind::kOffer;
  // Plan step this state plays, or -1 for states not following a plan.
  int step = -1;
  std::vector<SpeechEmission> speech;
  // Indexed by Move: probability of cooperate, defect.
  std::array<double, 2> action = {0.5, 0.5};

  double ActionProb(Move move) const { return action[static_cast<int>(move)]; }
};

// One expert strategy of a reference agent: a small machine over the events
// of a round, tagged with its plan and intent types.
class ExpertFsm {
 public:
  enum class Archetype { kLeader, kFollower, kMaximin, kBestResponse };

  ExpertFsm(std::string name, Archetype archetype, Role role, PlanCycle plan,
            std::vector<FsmState> states, int start, PlanType plan_type,
            IntentType intent_type, double potential);

  const std::string& name() const { return name_; }
  Archetype archetype() const { return archetype_; }
  Role role() const { return role_; }
  const PlanCycle& plan() const { return plan_; }
  const std::vector<FsmState>& states() const { return states_; }
  const FsmState& state(int index) const { return states_.at(index); }
  int num_states() const { return static_cast<int>(states_.size()); }
  int start() const { return start_; }
  PlanType plan_type() const { return plan_type_; }
  IntentType intent_type() const { return intent_type_; }
  double potential() const { return potential_; }

  // Index of the state with this name, or -1.
  int FindState(const std::string& name) const;

  // Deterministic, total transition.
  int Step(int state, const GameEvent& event) const;

  // Human-readable rendering of states, emissions and transitions.
  std::string Dump() const;

 private:
  int AcceptStateFor(const PlanCycle& proposal) const;

  std::string name_;
  Archetype archetype_;
  Role role_;
  PlanCycle plan_;
  std::vector<FsmState> states_;
  int start_;
  PlanType plan_type_;
  IntentType intent_type_;
  double potential_;
};

// Successor state of `state` in `expert` under `event`.
int FsmStep(const ExpertFsm& expert, int state, const GameEvent& event);
PlanType ExpertPlanType(const ExpertFsm& expert);
IntentType ExpertIntentType(const ExpertFsm& expert);

// Builders for the four archetypes. Plans are absolute joint actions.
ExpertFsm MakeLeader(std::string name, const MatrixGame& game, Role role,
                     PlanCycle plan,
                     IntentType intent = IntentType::kMaximizePayoff);
ExpertFsm MakeFollower(std::string name, const MatrixGame& game, Role role,
                       PlanCycle plan,
                       IntentType intent = IntentType::kMaximizePayoff);
ExpertFsm MakeMaximin(const MatrixGame& game, Role role);
ExpertFsm MakeBestResponse(const MatrixGame& game, Role role);

// The Prisoner's Dilemma roster for a player seated at `role`: three leaders,
// three followers, maximin and best response.
std::vector<ExpertFsm> BuildExpertRoster(const MatrixGame& game,
                                         Role role = Role::kRow);

// Event raised by the partner's speech in the current round.
GameEvent SpeechEvent(const SpeechAct& partner_speech);

// Event raised by the round's joint action for an expert sitting in `state`.
// `punishment_satisfied` only matters in a Punish state.
GameEvent ActionEvent(const ExpertFsm& expert, int state, JointAction joint,
                      bool punishment_satisfied);

// Single-round reading of the punishment exit rule: the partner's payoff this
// round is below its average payoff under the offered plan.
bool PunishmentExitsAfter(const ExpertFsm& expert, const MatrixGame& game,
                          JointAction joint);

// Partner payoff under the plan, averaged over one cycle.
double PartnerPlanValue(const ExpertFsm& expert, const MatrixGame& game);

}  // namespace oppmodel

#endif  // OPPMODEL_EXPERTS_H_

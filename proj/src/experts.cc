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

#include "oppmodel/experts.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace oppmodel {
namespace {

std::array<double, 2> PureAction(Move move) {
  std::array<double, 2> a = {0.0, 0.0};
  a[static_cast<int>(move)] = 1.0;
  return a;
}

std::array<double, 2> BestResponseAction(const MatrixGame& game, Role self) {
  int defect_better = 0;
  int cooperate_better = 0;
  for (Move other : {Move::kCooperate, Move::kDefect}) {
    Points c = game.PayoffFor(self, Move::kCooperate, other);
    Points d = game.PayoffFor(self, Move::kDefect, other);
    if (d > c) ++defect_better;
    if (c > d) ++cooperate_better;
  }
  if (defect_better == 2) return PureAction(Move::kDefect);
  if (cooperate_better == 2) return PureAction(Move::kCooperate);
  return {0.5, 0.5};
}

double OwnPlanValue(const MatrixGame& game, Role role, const PlanCycle& plan) {
  double total = 0.0;
  for (const JointAction& j : plan) total += game.Payoff(j).Of(role);
  return total / static_cast<double>(plan.size());
}

std::string StepName(const std::string& base, const PlanCycle& plan, int step) {
  if (plan.size() == 1) return base;
  return base + "@" + std::to_string(step);
}

void CheckPlan(const PlanCycle& plan) {
  if (plan.empty() || plan.size() > 2) {
    throw std::invalid_argument("plan cycle length must be 1 or 2");
  }
}

}  // namespace

std::string PlanTypeName(PlanType type) {
  return type == PlanType::kLeader ? "Leader" : "Follower";
}

std::string IntentTypeName(IntentType type) {
  return type == IntentType::kMaximizePayoff ? "MaximizePayoff"
                                             : "MaximizeFairness";
}

std::string GameEvent::ToString() const {
  switch (kind) {
    case Kind::kRoundStart: return "RoundStart";
    case Kind::kPartnerProposed: return "PartnerProposed(" + proposal.ToString() + ")";
    case Kind::kPartnerComplied: return "PartnerComplied";
    case Kind::kPartnerDeviated: return "PartnerDeviated";
    case Kind::kPunishmentSatisfied: return "PunishmentSatisfied";
    case Kind::kSelfDeviated: return "SelfDeviated";
  }
  return "?";
}

ExpertFsm::ExpertFsm(std::string name, Archetype archetype, Role role,
                     PlanCycle plan, std::vector<FsmState> states, int start,
                     PlanType plan_type, IntentType intent_type,
                     double potential)
    : name_(std::move(name)),
      archetype_(archetype),
      role_(role),
      plan_(std::move(plan)),
      states_(std::move(states)),
      start_(start),
      plan_type_(plan_type),
      intent_type_(intent_type),
      potential_(potential) {
  if (states_.empty()) throw std::invalid_argument("expert without states");
  if (start_ < 0 || start_ >= num_states()) {
    throw std::invalid_argument("start state out of range");
  }
  if (potential_ < 0) throw std::invalid_argument("negative potential");
}

int ExpertFsm::FindState(const std::string& name) const {
  for (int i = 0; i < num_states(); ++i) {
    if (states_[i].name == name) return i;
  }
  return -1;
}

int ExpertFsm::AcceptStateFor(const PlanCycle& proposal) const {
  for (int i = 0; i < num_states(); ++i) {
    const FsmState& s = states_[i];
    if (s.kind == StateKind::kAccept && plan_[s.step] == proposal[0]) return i;
  }
  return -1;
}

int ExpertFsm::Step(int state, const GameEvent& event) const {
  using K = GameEvent::Kind;
  const FsmState& s = states_.at(state);
  const int plan_len = static_cast<int>(plan_.size());
  auto state_with = [&](StateKind kind, int step) {
    for (int i = 0; i < num_states(); ++i) {
      if (states_[i].kind == kind && states_[i].step == step) return i;
    }
    throw std::logic_error("missing state in " + name_);
  };

  switch (s.kind) {
    case StateKind::kOffer:
    case StateKind::kCooperate:
      switch (event.kind) {
        case K::kPartnerComplied:
          return state_with(StateKind::kCooperate, (s.step + 1) % plan_len);
        case K::kPartnerDeviated:
          return state_with(StateKind::kPunish, -1);
        case K::kSelfDeviated:
          return start_;
        default:
          return state;
      }
    case StateKind::kPunish:
      return event.kind == K::kPunishmentSatisfied ? start_ : state;
    case StateKind::kBestRespond:
      if (archetype_ == Archetype::kFollower &&
          event.kind == K::kPartnerProposed &&
          SameCycle(event.proposal.cycle(), plan_)) {
        return AcceptStateFor(event.proposal.cycle());
      }
      return state;
    case StateKind::kAccept:
      switch (event.kind) {
        case K::kPartnerProposed:
          if (SameCycle(event.proposal.cycle(), plan_)) {
            return AcceptStateFor(event.proposal.cycle());
          }
          return state_with(StateKind::kBestRespond, -1);
        case K::kPartnerComplied:
        case K::kSelfDeviated:
          return state_with(StateKind::kAccept, (s.step + 1) % plan_len);
        case K::kPartnerDeviated:
          return state_with(StateKind::kBestRespond, -1);
        default:
          return state;
      }
    case StateKind::kMaximin:
      return state;
  }
  return state;
}

std::string ExpertFsm::Dump() const {
  std::ostringstream out;
  out << "expert " << name_ << " (" << PlanTypeName(plan_type_) << ", "
      << IntentTypeName(intent_type_) << ", potential " << potential_;
  if (!plan_.empty()) out << ", plan " << CycleLabel(plan_);
  out << ")\n";

  std::vector<GameEvent> events = {
      GameEvent::Of(GameEvent::Kind::kRoundStart),
      GameEvent::Of(GameEvent::Kind::kPartnerComplied),
      GameEvent::Of(GameEvent::Kind::kPartnerDeviated),
      GameEvent::Of(GameEvent::Kind::kPunishmentSatisfied),
      GameEvent::Of(GameEvent::Kind::kSelfDeviated),
  };
  if (!plan_.empty()) {
    for (int k = 0; k < static_cast<int>(plan_.size()); ++k) {
      events.push_back(GameEvent::Proposed(SpeechAct::Propose(Rotate(plan_, k))));
    }
    // A proposal no roster plan uses.
    events.push_back(GameEvent::Proposed(
        SpeechAct::Propose({JointAction{Move::kDefect, Move::kDefect}})));
  }

  for (int i = 0; i < num_states(); ++i) {
    const FsmState& s = states_[i];
    out << "  state " << s.name << (i == start_ ? " [start]" : "") << "\n";
    out << "    speech:";
    for (const SpeechEmission& e : s.speech) {
      out << " " << e.speech.ToString() << "=" << e.prob;
    }
    out << "\n    action: " << ActionId{role_, Move::kCooperate}.Label() << "="
        << s.action[0] << " " << ActionId{role_, Move::kDefect}.Label() << "="
        << s.action[1] << "\n";
    for (const GameEvent& e : events) {
      int next = Step(i, e);
      if (next != i) {
        out << "    " << e.ToString() << " -> " << states_[next].name << "\n";
      }
    }
  }
  return out.str();
}

int FsmStep(const ExpertFsm& expert, int state, const GameEvent& event) {
  return expert.Step(state, event);
}

PlanType ExpertPlanType(const ExpertFsm& expert) { return expert.plan_type(); }
IntentType ExpertIntentType(const ExpertFsm& expert) {
  return expert.intent_type();
}

ExpertFsm MakeLeader(std::string name, const MatrixGame& game, Role role,
                     PlanCycle plan, IntentType intent) {
  CheckPlan(plan);
  const int len = static_cast<int>(plan.size());
  std::vector<FsmState> states;
  states.push_back({"Offer", StateKind::kOffer, 0,
                    {{SpeechAct::Propose(plan), 1.0}},
                    PureAction(plan[0].Of(role))});
  for (int i = 1; i <= len; ++i) {
    int step = i % len;
    states.push_back({StepName("Cooperate", plan, step), StateKind::kCooperate,
                      step, {{SpeechAct::Propose(Rotate(plan, step)), 1.0}},
                      PureAction(plan[step].Of(role))});
  }
  states.push_back({"Punish", StateKind::kPunish, -1,
                    {{SpeechAct::Of(SpeechKind::kThreat), 1.0}},
                    PureAction(game.PunishMove(role))});
  double potential = OwnPlanValue(game, role, plan);
  return ExpertFsm(std::move(name), ExpertFsm::Archetype::kLeader, role,
                   std::move(plan), std::move(states), 0, PlanType::kLeader,
                   intent, potential);
}

ExpertFsm MakeFollower(std::string name, const MatrixGame& game, Role role,
                       PlanCycle plan, IntentType intent) {
  CheckPlan(plan);
  const int len = static_cast<int>(plan.size());
  std::vector<FsmState> states;
  states.push_back({"BestRespond", StateKind::kBestRespond, -1,
                    {{SpeechAct::Silence(), 1.0}},
                    BestResponseAction(game, role)});
  for (int step = 0; step < len; ++step) {
    states.push_back({StepName("Accept", plan, step), StateKind::kAccept, step,
                      {{SpeechAct::Propose(Rotate(plan, step)), 1.0}},
                      PureAction(plan[step].Of(role))});
  }
  double potential = OwnPlanValue(game, role, plan);
  return ExpertFsm(std::move(name), ExpertFsm::Archetype::kFollower, role,
                   std::move(plan), std::move(states), 0, PlanType::kFollower,
                   intent, potential);
}

ExpertFsm MakeMaximin(const MatrixGame& game, Role role) {
  std::vector<FsmState> states = {{"Maximin", StateKind::kMaximin, -1,
                                   {{SpeechAct::Silence(), 1.0}},
                                   PureAction(game.MaximinMove(role))}};
  return ExpertFsm("maximin", ExpertFsm::Archetype::kMaximin, role, {},
                   std::move(states), 0, PlanType::kFollower,
                   IntentType::kMaximizePayoff, game.MaximinValue(role));
}

ExpertFsm MakeBestResponse(const MatrixGame& game, Role role) {
  std::vector<FsmState> states = {{"BestRespond", StateKind::kBestRespond, -1,
                                   {{SpeechAct::Silence(), 1.0}},
                                   BestResponseAction(game, role)}};
  // Value of best-responding to a partner who plays its own maximin move.
  Move partner = game.MaximinMove(Other(role));
  Points best = std::max(game.PayoffFor(role, Move::kCooperate, partner),
                         game.PayoffFor(role, Move::kDefect, partner));
  return ExpertFsm("best-response", ExpertFsm::Archetype::kBestResponse, role,
                   {}, std::move(states), 0, PlanType::kFollower,
                   IntentType::kMaximizePayoff, best);
}

std::vector<ExpertFsm> BuildExpertRoster(const MatrixGame& game, Role role) {
  const JointAction ac{Move::kCooperate, Move::kCooperate};
  const JointAction ad{Move::kCooperate, Move::kDefect};
  const JointAction bc{Move::kDefect, Move::kCooperate};
  std::vector<ExpertFsm> roster;
  roster.push_back(MakeLeader("leader-pure-CC", game, role, {ac}));
  roster.push_back(MakeLeader("leader-alternating-AC-BC", game, role, {ac, bc}));
  roster.push_back(MakeLeader("leader-alternating-AC-AD", game, role, {ac, ad}));
  roster.push_back(MakeFollower("follower-pure-CC", game, role, {ac}));
  roster.push_back(MakeFollower("follower-alternating-AC-BC", game, role, {ac, bc}));
  roster.push_back(MakeFollower("follower-alternating-AC-AD", game, role, {ac, ad}));
  roster.push_back(MakeMaximin(game, role));
  roster.push_back(MakeBestResponse(game, role));
  return roster;
}

GameEvent SpeechEvent(const SpeechAct& partner_speech) {
  if (partner_speech.is_proposal()) return GameEvent::Proposed(partner_speech);
  return GameEvent::Of(GameEvent::Kind::kRoundStart);
}

GameEvent ActionEvent(const ExpertFsm& expert, int state, JointAction joint,
                      bool punishment_satisfied) {
  using K = GameEvent::Kind;
  const FsmState& s = expert.state(state);
  switch (s.kind) {
    case StateKind::kOffer:
    case StateKind::kCooperate:
    case StateKind::kAccept: {
      const Role self = expert.role();
      const JointAction& expected = expert.plan()[s.step];
      if (joint.Of(Other(self)) != expected.Of(Other(self))) {
        return GameEvent::Of(K::kPartnerDeviated);
      }
      if (joint.Of(self) != expected.Of(self)) {
        return GameEvent::Of(K::kSelfDeviated);
      }
      return GameEvent::Of(K::kPartnerComplied);
    }
    case StateKind::kPunish:
      return GameEvent::Of(punishment_satisfied ? K::kPunishmentSatisfied
                                                : K::kRoundStart);
    default:
      return GameEvent::Of(K::kRoundStart);
  }
}

double PartnerPlanValue(const ExpertFsm& expert, const MatrixGame& game) {
  if (expert.plan().empty()) return 0.0;
  return OwnPlanValue(game, Other(expert.role()), expert.plan());
}

bool PunishmentExitsAfter(const ExpertFsm& expert, const MatrixGame& game,
                          JointAction joint) {
  return game.Payoff(joint).Of(Other(expert.role())) <
         PartnerPlanValue(expert, game);
}

}  // namespace oppmodel

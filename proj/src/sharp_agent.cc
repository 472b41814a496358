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

#include "oppmodel/sharp_agent.h"

#include <algorithm>
#include <stdexcept>

namespace oppmodel {

void SharpAgentConfig::Validate() const {
  if (aspiration < 0) throw std::invalid_argument("aspiration must be >= 0");
  if (!(aspiration_decay > 0 && aspiration_decay <= 1)) {
    throw std::invalid_argument("aspiration decay must be in (0, 1]");
  }
  if (roster.empty()) throw std::invalid_argument("empty expert roster");
}

SharpAgentConfig DefaultSharpConfig(const MatrixGame& game, Role role) {
  SharpAgentConfig config;
  config.roster = BuildExpertRoster(game, role);
  return config;
}

SharpAgent::SharpAgent(SharpAgentConfig config, MatrixGame game, Role role,
                       std::uint64_t seed)
    : config_(std::move(config)), game_(std::move(game)), role_(role),
      rng_(seed) {
  config_.Validate();
  for (const ExpertFsm& e : config_.roster) {
    if (e.role() != role_) {
      throw std::invalid_argument("expert " + e.name() +
                                  " is built for the other seat");
    }
    potentials_.push_back(e.potential());
  }
}

double SharpAgent::Uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double SharpAgent::EffectivePotential(int expert) const {
  const ExpertFsm& e = config_.roster[expert];
  double p = potentials_[expert];
  if (e.archetype() == ExpertFsm::Archetype::kFollower &&
      !(partner_proposal_ && SameCycle(*partner_proposal_, e.plan()))) {
    p = std::min(p, static_cast<double>(game_.MaximinValue(role_)));
  }
  return p;
}

std::vector<int> SharpAgent::Candidates() const {
  const int n = static_cast<int>(config_.roster.size());
  std::vector<int> eligible;
  for (int j = 0; j < n; ++j) {
    if (EffectivePotential(j) >= config_.aspiration) eligible.push_back(j);
  }
  if (eligible.empty()) {
    for (int j = 0; j < n; ++j) eligible.push_back(j);
    return eligible;
  }
  if (config_.honor_congruence && partner_proposal_) {
    std::vector<int> congruent;
    for (int j : eligible) {
      if (SameCycle(config_.roster[j].plan(), *partner_proposal_)) {
        congruent.push_back(j);
      }
    }
    if (!congruent.empty()) return congruent;
  }
  return eligible;
}

int SharpAgent::Select() const {
  int best = -1;
  for (int j : Candidates()) {
    if (best < 0 || EffectivePotential(j) > EffectivePotential(best)) best = j;
  }
  return best;
}

SpeechAct SharpAgent::Speak() {
  if (phase_ != Phase::kSpeak) throw std::logic_error("Speak out of order");
  int chosen = Select();
  if (chosen != active_) {
    active_ = chosen;
    state_ = config_.roster[active_].start();
  }
  phase_ = Phase::kAct;

  const FsmState& s = config_.roster[active_].state(state_);
  if (s.speech.size() == 1) return s.speech.front().speech;
  double u = Uniform();
  for (const SpeechEmission& e : s.speech) {
    if (u < e.prob) return e.speech;
    u -= e.prob;
  }
  return s.speech.back().speech;
}

ActionId SharpAgent::Act(const SpeechAct& partner_speech) {
  if (phase_ != Phase::kAct) throw std::logic_error("Act out of order");
  const ExpertFsm& expert = config_.roster[active_];
  state_ = expert.Step(state_, SpeechEvent(partner_speech));
  phase_ = Phase::kObserve;

  const FsmState& s = expert.state(state_);
  Move move;
  if (s.action[0] == 1.0 || s.action[1] == 1.0) {
    move = s.action[0] == 1.0 ? Move::kCooperate : Move::kDefect;
  } else {
    move = Uniform() < s.action[0] ? Move::kCooperate : Move::kDefect;
  }
  return {role_, move};
}

void SharpAgent::Observe(const RoundRecord& round) {
  if (phase_ != Phase::kObserve) throw std::logic_error("Observe out of order");
  const ExpertFsm& expert = config_.roster[active_];
  const Role partner = Other(role_);
  const FsmState& s = expert.state(state_);
  const Points partner_payoff = game_.Payoff(round.joint).Of(partner);

  bool satisfied = false;
  if (s.kind == StateKind::kPunish) {
    const PlanCycle& plan = expert.plan();
    const JointAction cf = plan[cf_step_ % plan.size()];
    debt_ += partner_payoff - game_.Payoff(cf).Of(partner);
    ++cf_step_;
    ++punished_rounds_;
    satisfied = debt_ < 0 || punished_rounds_ >= kMaxPunishRounds;
  }

  GameEvent event = ActionEvent(expert, state_, round.joint, satisfied);
  if (event.kind == GameEvent::Kind::kPartnerDeviated &&
      expert.archetype() == ExpertFsm::Archetype::kLeader) {
    const JointAction& expected = expert.plan()[s.step];
    JointAction compliant = JointAction::FromPerspective(
        role_, round.joint.Of(role_), expected.Of(partner));
    debt_ = partner_payoff - game_.Payoff(compliant).Of(partner);
    cf_step_ = s.step + 1;
    punished_rounds_ = 0;
  }
  state_ = expert.Step(state_, event);

  const double d = config_.aspiration_decay;
  const double realized = game_.Payoff(round.joint).Of(role_);
  potentials_[active_] = d * potentials_[active_] + (1 - d) * realized;
  config_.aspiration = d * config_.aspiration + (1 - d) * realized;

  const SpeechAct& heard = round.Speech(partner);
  if (heard.is_proposal()) partner_proposal_ = heard.cycle();
  phase_ = Phase::kSpeak;
}

SharpStep SharpAgentStep(const SharpAgentConfig& config, const MatrixGame& game,
                         Role role, const InteractionLog& history,
                         std::uint64_t seed, const SpeechAct& partner_speech) {
  SharpAgent agent(config, game, role, seed);
  for (const RoundRecord& r : history.rounds) {
    agent.Speak();
    agent.Act(r.Speech(Other(role)));
    agent.Observe(r);
  }
  SharpStep out;
  out.speech = agent.Speak();
  out.action = agent.Act(partner_speech);
  out.config = agent.config();
  out.expert = agent.active_expert();
  return out;
}

std::vector<int> TraceExperts(const SharpAgentConfig& config,
                              const InteractionLog& log, Role role,
                              std::uint64_t seed) {
  SharpAgent agent(config, log.game, role, seed);
  std::vector<int> trace;
  trace.reserve(log.size());
  for (const RoundRecord& r : log.rounds) {
    agent.Speak();
    trace.push_back(agent.active_expert());
    agent.Act(r.Speech(Other(role)));
    agent.Observe(r);
  }
  return trace;
}

}  // namespace oppmodel

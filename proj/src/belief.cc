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

#include "oppmodel/belief.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oppmodel/errors.h"

namespace oppmodel {
namespace {

Eigen::VectorXd OneHot(int n, int index) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v(index) = 1.0;
  return v;
}

// Normalizes in place; false if the mass is zero or not finite.
bool Normalize(Eigen::VectorXd& v) {
  double total = v.sum();
  if (!(total > 0.0) || !std::isfinite(total)) return false;
  v /= total;
  return true;
}

void CheckRows(const Eigen::MatrixXd& m, double tol, const std::string& what) {
  for (int r = 0; r < m.rows(); ++r) {
    OPPMODEL_CHECK(std::abs(m.row(r).sum() - 1.0) <= tol,
                   what + " row " + std::to_string(r) + " does not sum to 1");
    OPPMODEL_CHECK(m.row(r).minCoeff() >= 0.0,
                   what + " row " + std::to_string(r) + " has a negative entry");
  }
}

BeliefState Reset(const BeliefState& prior, BeliefPhase phase) {
  return {prior.probs, phase};
}

SpeechAct SpeechOrSilence(const SpeechAct& s, bool use_cheap_talk) {
  return use_cheap_talk ? s : SpeechAct::Silence();
}

}  // namespace

StateSpace::StateSpace(const std::vector<ExpertFsm>& roster) {
  for (const ExpertFsm& e : roster) {
    int j = num_experts();
    experts_.push_back({e.name(), e.plan_type(), e.intent_type(), e.potential(),
                        size(), e.num_states(), e.start()});
    for (const FsmState& s : e.states()) {
      expert_of_.push_back(j);
      labels_.push_back(e.name() + "/" + s.name);
    }
  }
}

StateSpace StateSpace::Synthetic(const std::vector<int>& sizes) {
  StateSpace space;
  for (int size : sizes) {
    int j = space.num_experts();
    space.experts_.push_back({"expert" + std::to_string(j), PlanType::kLeader,
                              IntentType::kMaximizePayoff, 1.0, space.size(),
                              size, 0});
    for (int i = 0; i < size; ++i) {
      space.expert_of_.push_back(j);
      space.labels_.push_back("expert" + std::to_string(j) + "/s" +
                              std::to_string(i));
    }
  }
  return space;
}

bool BeliefState::IsNormalized(double tol) const {
  return probs.size() > 0 && std::abs(probs.sum() - 1.0) <= tol &&
         probs.minCoeff() >= 0.0;
}

ConditionalModels ConditionalModels::Zeros(int n, Role modeled_role) {
  ConditionalModels m;
  m.num_states = n;
  m.modeled_role = modeled_role;
  m.speech_emission = Eigen::MatrixXd::Zero(n, kNumSpeechSymbols);
  m.reflection.assign(kNumSpeechSymbols * kNumSpeechSymbols,
                      Eigen::MatrixXd::Zero(n, n));
  m.action_emission = Eigen::MatrixXd::Zero(n, 2);
  for (auto& u : m.update) u = Eigen::MatrixXd::Zero(n, n);
  return m;
}

void ConditionalModels::Validate(double tol) const {
  CheckRows(speech_emission, tol, "speech emission");
  for (const auto& r : reflection) CheckRows(r, tol, "reflection");
  CheckRows(action_emission, tol, "action emission");
  for (const auto& u : update) CheckRows(u, tol, "update");
}

Eigen::VectorXd SmoothRow(const Eigen::VectorXd& row, double epsilon) {
  const double n = static_cast<double>(row.size());
  Eigen::VectorXd out = row.array() + epsilon / n;
  return out / out.sum();
}

ConditionalModels BuildModels(const std::vector<ExpertFsm>& roster,
                              const MatrixGame& game, double epsilon) {
  if (roster.empty()) {
    throw std::invalid_argument("cannot build a model from an empty roster");
  }
  if (!(epsilon > 0.0 && epsilon <= 0.2)) {
    throw std::invalid_argument(
        "smoothing epsilon must be in (0, 0.2]; got " + std::to_string(epsilon));
  }
  const Role role = roster.front().role();
  for (const ExpertFsm& e : roster) {
    if (e.role() != role) {
      throw std::invalid_argument("roster mixes seats");
    }
  }

  const StateSpace space(roster);
  const int n = space.size();
  ConditionalModels m = ConditionalModels::Zeros(n, role);
  m.smoothing_epsilon = epsilon;

  for (int s = 0; s < n; ++s) {
    const ExpertFsm& e = roster[space.ExpertOf(s)];
    const FsmState& st = e.state(space.LocalIndex(s));
    Eigen::VectorXd speech = Eigen::VectorXd::Zero(kNumSpeechSymbols);
    for (const SpeechEmission& em : st.speech) {
      speech(SpeechSymbol(em.speech)) += em.prob;
    }
    m.speech_emission.row(s) = SmoothRow(speech, epsilon);
    Eigen::VectorXd action(2);
    action << st.action[0], st.action[1];
    m.action_emission.row(s) = SmoothRow(action, epsilon);
  }

  // Reflection depends on the partner's speech only; the modeled player's
  // own speech enters through the emission table.
  for (int zp = 0; zp < kNumSpeechSymbols; ++zp) {
    const GameEvent event = SpeechEvent(SpeechFromSymbol(zp));
    Eigen::MatrixXd kernel(n, n);
    for (int s = 0; s < n; ++s) {
      const int j = space.ExpertOf(s);
      int next = roster[j].Step(space.LocalIndex(s), event);
      kernel.row(s) = SmoothRow(OneHot(n, space.GlobalIndex(j, next)), epsilon);
    }
    for (int zm = 0; zm < kNumSpeechSymbols; ++zm) {
      m.MutableReflection(zp, zm) = kernel;
    }
  }

  // Expert switching lands on another expert's start state.
  std::vector<Eigen::VectorXd> switch_rows(space.num_experts());
  for (int j = 0; j < space.num_experts(); ++j) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < space.num_experts(); ++k) {
      if (k != j) v(space.GlobalIndex(k, space.expert(k).start)) = 1.0;
    }
    if (space.num_experts() > 1) v /= v.sum();
    switch_rows[j] = v;
  }

  for (Move own : {Move::kCooperate, Move::kDefect}) {
    for (Move other : {Move::kCooperate, Move::kDefect}) {
      const JointAction joint = JointAction::FromPerspective(role, own, other);
      Eigen::MatrixXd& kernel = m.update[ConditionalModels::PerspectiveIndex(own, other)];
      for (int s = 0; s < n; ++s) {
        const int j = space.ExpertOf(s);
        const ExpertFsm& e = roster[j];
        const int local = space.LocalIndex(s);
        bool exits = PunishmentExitsAfter(e, game, joint);
        int next = e.Step(local, ActionEvent(e, local, joint, exits));
        Eigen::VectorXd stay = OneHot(n, space.GlobalIndex(j, next));
        Eigen::VectorXd raw = space.num_experts() > 1
                                  ? Eigen::VectorXd((1 - epsilon) * stay +
                                                    epsilon * switch_rows[j])
                                  : stay;
        kernel.row(s) = SmoothRow(raw, epsilon);
      }
    }
  }
  m.Validate();
  return m;
}

BeliefState BuildPrior(const StateSpace& space) {
  if (space.num_experts() == 0) {
    throw std::invalid_argument("cannot build a prior for an empty roster");
  }
  double max_potential = 0.0;
  for (int j = 0; j < space.num_experts(); ++j) {
    max_potential = std::max(max_potential, space.expert(j).potential);
  }
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(space.size());
  for (int j = 0; j < space.num_experts(); ++j) {
    const StateSpace::ExpertInfo& e = space.expert(j);
    // Share of aspiration levels in [0, max] that this potential meets.
    double mass = max_potential > 0.0 ? e.potential / max_potential : 1.0;
    if (e.size == 1) {
      probs(e.first) = mass;
      continue;
    }
    for (int i = 0; i < e.size; ++i) {
      probs(e.first + i) = i == e.start ? 0.9 * mass : 0.1 * mass / (e.size - 1);
    }
  }
  OPPMODEL_CHECK(Normalize(probs), "prior has no mass");
  return {probs, BeliefPhase::kPropositional};
}

BeliefState BuildPrior(const std::vector<ExpertFsm>& roster,
                       const StateSpace& space) {
  if (roster.empty()) {
    throw std::invalid_argument("cannot build a prior for an empty roster");
  }
  return BuildPrior(space);
}

ObservationRecord ObservationRecord::From(const RoundRecord& round,
                                          Role modeled) {
  return {round.Speech(modeled), round.Speech(Other(modeled)),
          round.MoveOf(modeled), round.MoveOf(Other(modeled))};
}

BeliefState ApplySpeech(const BeliefState& bel, const SpeechAct& speech,
                        const ConditionalModels& models) {
  Eigen::VectorXd v =
      bel.probs.cwiseProduct(models.speech_emission.col(SpeechSymbol(speech)));
  if (!Normalize(v)) return {Eigen::VectorXd::Zero(v.size()), bel.phase};
  return {v, BeliefPhase::kPropositional};
}

BeliefState Reflect(const BeliefState& bel, const SpeechAct& partner_speech,
                    const SpeechAct& modeled_speech,
                    const ConditionalModels& models) {
  const Eigen::MatrixXd& kernel = models.Reflection(
      SpeechSymbol(partner_speech), SpeechSymbol(modeled_speech));
  return {kernel.transpose() * bel.probs, BeliefPhase::kInterim};
}

StepResult FilterStep(const BeliefState& bel, const ObservationRecord& obs,
                      const std::optional<SpeechAct>& next_speech,
                      const ConditionalModels& models,
                      const BeliefState& prior) {
  if (bel.phase != BeliefPhase::kPropositional) {
    throw std::invalid_argument("filter step expects a propositional belief");
  }
  if (bel.probs.size() != models.num_states) {
    throw std::invalid_argument("belief and model disagree on state count");
  }

  StepResult out;
  Eigen::VectorXd interim =
      Reflect(bel, obs.partner_speech, obs.modeled_speech, models).probs;
  interim = interim.cwiseProduct(
      models.action_emission.col(static_cast<int>(obs.modeled_move)));
  if (!Normalize(interim)) {
    out.interim = Reset(prior, BeliefPhase::kInterim);
    out.next = Reset(prior, BeliefPhase::kPropositional);
    out.degenerate = true;
    return out;
  }
  out.interim = {interim, BeliefPhase::kInterim};

  Eigen::VectorXd next =
      models.Update(obs.modeled_move, obs.partner_move).transpose() * interim;
  if (next_speech) {
    next = next.cwiseProduct(
        models.speech_emission.col(SpeechSymbol(*next_speech)));
  }
  if (!Normalize(next)) {
    out.next = Reset(prior, BeliefPhase::kPropositional);
    out.degenerate = true;
    return out;
  }
  out.next = {next, BeliefPhase::kPropositional};
  return out;
}

FilterTrace RunFilter(const InteractionLog& log, Role modeled,
                      const ConditionalModels& models, const BeliefState& prior,
                      bool use_cheap_talk) {
  FilterTrace trace;
  trace.initial = prior;
  if (log.rounds.empty()) return trace;

  if (use_cheap_talk) {
    BeliefState first = ApplySpeech(prior, log.rounds[0].Speech(modeled), models);
    if (first.IsNormalized()) {
      trace.initial = first;
    } else {
      ++trace.degenerate_count;
    }
  }

  BeliefState bel = trace.initial;
  trace.rounds.reserve(log.size());
  for (std::size_t t = 0; t < log.size(); ++t) {
    ObservationRecord obs = ObservationRecord::From(log.rounds[t], modeled);
    obs.modeled_speech = SpeechOrSilence(obs.modeled_speech, use_cheap_talk);
    obs.partner_speech = SpeechOrSilence(obs.partner_speech, use_cheap_talk);
    std::optional<SpeechAct> next_speech;
    if (use_cheap_talk && t + 1 < log.size()) {
      next_speech = log.rounds[t + 1].Speech(modeled);
    }
    StepResult step = FilterStep(bel, obs, next_speech, models, prior);
    OPPMODEL_CHECK(step.next.IsNormalized() && step.interim.IsNormalized(),
                   "filter produced an unnormalized belief");
    if (step.degenerate) ++trace.degenerate_count;
    bel = step.next;
    trace.rounds.push_back(std::move(step));
  }
  return trace;
}

BeliefState PreActionBelief(const FilterTrace& trace, const InteractionLog& log,
                            int t, Role modeled, const ConditionalModels& models,
                            bool use_cheap_talk) {
  const RoundRecord& r = log.rounds.at(t);
  return Reflect(trace.Propositional(t),
                 SpeechOrSilence(r.Speech(Other(modeled)), use_cheap_talk),
                 SpeechOrSilence(r.Speech(modeled), use_cheap_talk), models);
}

}  // namespace oppmodel

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

#ifndef OPPMODEL_BELIEF_H_
#define OPPMODEL_BELIEF_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oppmodel/experts.h"
#include "oppmodel/game.h"
#include "oppmodel/interaction_log.h"
#include "oppmodel/speech.h"

namespace oppmodel {

inline constexpr double kDefaultEpsilon = 0.02;
inline constexpr double kNormTolerance = 1e-9;

// Ordered union of every expert's states. State i belongs to expert
// ExpertOf(i); an expert's states are contiguous.
class StateSpace {
 public:
  struct ExpertInfo {
    std::string name;
    PlanType plan_type;
    IntentType intent_type;
    double potential;
    int first;  // global index of the expert's state 0
    int size;
    int start;  // local start state
  };

  StateSpace() = default;
  explicit StateSpace(const std::vector<ExpertFsm>& roster);
  // A space without roster semantics: `sizes[j]` states for expert j, start
  // state 0, every expert a Leader maximizing payoff.
  static StateSpace Synthetic(const std::vector<int>& sizes);

  int size() const { return static_cast<int>(expert_of_.size()); }
  int num_experts() const { return static_cast<int>(experts_.size()); }
  int ExpertOf(int state) const { return expert_of_.at(state); }
  int LocalIndex(int state) const { return state - experts_[ExpertOf(state)].first; }
  int GlobalIndex(int expert, int local) const { return experts_.at(expert).first + local; }
  const ExpertInfo& expert(int j) const { return experts_.at(j); }
  const std::string& Label(int state) const { return labels_.at(state); }

 private:
  std::vector<ExpertInfo> experts_;
  std::vector<int> expert_of_;
  std::vector<std::string> labels_;
};

enum class BeliefPhase { kPropositional, kInterim };

struct BeliefState {
  Eigen::VectorXd probs;
  BeliefPhase phase = BeliefPhase::kPropositional;

  double Total() const { return probs.sum(); }
  bool IsNormalized(double tol = kNormTolerance) const;
};

// The four probability tables of the model, all for the modeled seat.
//
// Row-stochastic kernels are stored (from, to). The update kernel is indexed
// by PerspectiveIndex(modeled move, partner move).
struct ConditionalModels {
  int num_states = 0;
  Role modeled_role = Role::kRow;
  double smoothing_epsilon = kDefaultEpsilon;
  Eigen::MatrixXd speech_emission;           // N x kNumSpeechSymbols
  std::vector<Eigen::MatrixXd> reflection;   // [z_partner * S + z_modeled]
  Eigen::MatrixXd action_emission;           // N x 2, columns by Move
  std::array<Eigen::MatrixXd, 4> update;

  static int PerspectiveIndex(Move modeled, Move partner) {
    return 2 * static_cast<int>(modeled) + static_cast<int>(partner);
  }
  const Eigen::MatrixXd& Reflection(int z_partner, int z_modeled) const {
    return reflection.at(z_partner * kNumSpeechSymbols + z_modeled);
  }
  Eigen::MatrixXd& MutableReflection(int z_partner, int z_modeled) {
    return reflection.at(z_partner * kNumSpeechSymbols + z_modeled);
  }
  const Eigen::MatrixXd& Update(Move modeled, Move partner) const {
    return update[PerspectiveIndex(modeled, partner)];
  }

  // Allocates zeroed tables for `n` states.
  static ConditionalModels Zeros(int n, Role modeled_role);
  // Throws InvariantError unless every conditional sums to 1 within `tol`
  // and has no negative entry.
  void Validate(double tol = kNormTolerance) const;
};

// Adds eps/n to each of the n entries and renormalizes.
Eigen::VectorXd SmoothRow(const Eigen::VectorXd& row, double epsilon);

// Compiles the model tables from the roster's state machines. Throws
// std::invalid_argument for an empty roster or epsilon outside (0, 0.2].
ConditionalModels BuildModels(const std::vector<ExpertFsm>& roster,
                              const MatrixGame& game, double epsilon);

// First-round belief: expert mass proportional to the share of aspiration
// levels (uniform on [0, max potential]) its potential meets; within an
// expert 0.9 on the start state and 0.1 spread over the rest.
BeliefState BuildPrior(const StateSpace& space);
BeliefState BuildPrior(const std::vector<ExpertFsm>& roster,
                       const StateSpace& space);

// One round as seen by the modeling agent.
struct ObservationRecord {
  SpeechAct modeled_speech;
  SpeechAct partner_speech;
  Move modeled_move = Move::kCooperate;
  Move partner_move = Move::kCooperate;

  static ObservationRecord From(const RoundRecord& round, Role modeled);
};

struct StepResult {
  BeliefState interim;
  BeliefState next;
  bool degenerate = false;
};

// Weights a propositional belief by the modeled player's speech.
BeliefState ApplySpeech(const BeliefState& bel, const SpeechAct& speech,
                        const ConditionalModels& models);

// Reflection transition alone (before the action is seen).
BeliefState Reflect(const BeliefState& bel, const SpeechAct& partner_speech,
                    const SpeechAct& modeled_speech,
                    const ConditionalModels& models);

// One round of the two-transition Bayes filter. If the evidence has zero
// mass, the belief is reset to `prior` and `degenerate` is set.
StepResult FilterStep(const BeliefState& bel, const ObservationRecord& obs,
                      const std::optional<SpeechAct>& next_speech,
                      const ConditionalModels& models,
                      const BeliefState& prior);

struct FilterTrace {
  // Round-0 propositional belief (prior, weighted by round-0 speech).
  BeliefState initial;
  std::vector<StepResult> rounds;
  int degenerate_count = 0;

  // Propositional belief at the start of round t.
  const BeliefState& Propositional(int t) const {
    return t == 0 ? initial : rounds.at(t - 1).next;
  }
};

// Filters a whole log for the player at `modeled`. Without cheap talk every
// speech is read as Silence, so speech carries no evidence.
FilterTrace RunFilter(const InteractionLog& log, Role modeled,
                      const ConditionalModels& models, const BeliefState& prior,
                      bool use_cheap_talk);

// Belief over the action-emitting state of round t: the propositional belief
// pushed through that round's reflection transition.
BeliefState PreActionBelief(const FilterTrace& trace, const InteractionLog& log,
                            int t, Role modeled, const ConditionalModels& models,
                            bool use_cheap_talk);

}  // namespace oppmodel

#endif  // OPPMODEL_BELIEF_H_

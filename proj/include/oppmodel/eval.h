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

#ifndef OPPMODEL_EVAL_H_
#define OPPMODEL_EVAL_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "oppmodel/baselines.h"
#include "oppmodel/belief.h"
#include "oppmodel/experts.h"
#include "oppmodel/interaction_log.h"
#include "oppmodel/predictors.h"

namespace oppmodel {

// Interactions with a lying rate below this count as honest.
inline constexpr double kHonestLyingThreshold = 0.25;
// Interactions whose repetition fraction is at most this count as variable.
inline constexpr double kVariableRepetitionThreshold = 0.25;

template <typename T>
double Accuracy(const std::vector<T>& predictions, const std::vector<T>& actuals) {
  if (predictions.size() != actuals.size()) {
    throw std::invalid_argument("accuracy: " + std::to_string(predictions.size()) +
                                " predictions vs " + std::to_string(actuals.size()) +
                                " actuals");
  }
  if (predictions.empty()) throw std::invalid_argument("accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (predictions[i] == actuals[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

// Fraction of rounds covered by a standing proposal in which the role's move
// contradicts its part of the proposed play. A proposal stands, advancing
// through its cycle each round, until replaced or until the role says
// anything other than Silence or a proposal. Zero with no covered rounds.
double LyingRate(const InteractionLog& log, Role role);

// Longest run of identical consecutive moves by `role`, over all rounds.
double RepetitionFraction(const InteractionLog& log, Role role);

struct TTestResult {
  double t = 0.0;
  int df = 0;
  double p_two_tailed = 1.0;
  bool infinite_t = false;
};

// Paired two-tailed t-test on xs - ys. Requires equal lengths >= 2.
TTestResult PairedTTest(const std::vector<double>& xs, const std::vector<double>& ys);

// Filter machinery for one modeled seat.
struct ModelContext {
  Role modeled = Role::kRow;
  std::vector<ExpertFsm> roster;
  StateSpace space;
  ConditionalModels models;
  BeliefState prior;

  static ModelContext Build(const MatrixGame& game, Role modeled,
                            double epsilon = kDefaultEpsilon);
};

struct GamePredictions {
  std::vector<Prediction> action_map, action_agg;
  std::vector<Prediction> plan_map, plan_agg;
  std::vector<Prediction> intent_map, intent_agg;
  std::vector<BeliefState> beliefs;  // pre-action belief per round
  int degenerate = 0;
};

GamePredictions PredictGame(const InteractionLog& log, const ModelContext& ctx,
                            bool use_cheap_talk);

// Ground truth for plan and intent: the active expert of the reference
// agent replayed over the log in the modeled seat.
struct GroundTruth {
  std::vector<Move> actions;
  std::vector<PlanType> plans;
  std::vector<IntentType> intents;
};
GroundTruth ReferenceTruth(const InteractionLog& log, const ModelContext& ctx);

struct EvalResult {
  std::string predictor_id;
  bool with_cheap_talk = true;
  std::vector<std::string> game_ids;
  std::vector<double> per_game;
  std::vector<int> degenerate_flags;
  double mean = 0.0;
};

// Six results (action, plan, intent x map, agg), in that order.
std::vector<EvalResult> Evaluate(const std::vector<InteractionLog>& corpus,
                                 const ModelContext& ctx, bool use_cheap_talk);

std::string EvalCsv(const std::vector<EvalResult>& results);

// Action accuracy of a fixed-strategy predictor on one log.
double BaselineAccuracy(StrategyId id, const InteractionLog& log, Role modeled);

struct ComparisonRow {
  std::string game_id;
  std::string predictor;
  bool with_cheap_talk = true;
  double accuracy = 0.0;
  double lying_rate = 0.0;
  double repetition_fraction = 0.0;
  int degenerate_flags = 0;
};

struct SubsetMean {
  std::string subset;  // all, honest, liars, variable
  std::string predictor;
  bool with_cheap_talk = true;
  int games = 0;
  double mean = 0.0;
};

struct PairedComparison {
  std::string subset;
  std::string a, b;  // predictor labels
  int games = 0;
  double mean_a = 0.0, mean_b = 0.0;
  TTestResult test;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::vector<SubsetMean> means;
  std::vector<PairedComparison> tests;

  std::string Csv() const;
  std::string Summary() const;
};

// Action predictors: MAP and aggregation with and without cheap talk, plus
// every fixed strategy. Throws std::invalid_argument on an empty corpus.
ComparisonReport ComparePredictors(const std::vector<InteractionLog>& corpus,
                                   const ModelContext& ctx);

}  // namespace oppmodel

#endif  // OPPMODEL_EVAL_H_

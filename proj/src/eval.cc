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

#include "oppmodel/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "oppmodel/sharp_agent.h"
#include "oppmodel/student_t.h"

namespace oppmodel {
namespace {

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

double Mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

std::string ModelLabel(const std::string& method, bool cheap_talk) {
  return method + (cheap_talk ? "+ct" : "-ct");
}

template <typename T>
std::vector<T> Values(const std::vector<Prediction>& preds, T (Prediction::*get)() const) {
  std::vector<T> out;
  out.reserve(preds.size());
  for (const Prediction& p : preds) out.push_back((p.*get)());
  return out;
}

}  // namespace

double LyingRate(const InteractionLog& log, Role role) {
  std::optional<PlanCycle> standing;
  int offset = 0;
  int covered = 0;
  int lies = 0;
  for (const RoundRecord& r : log.rounds) {
    const SpeechAct& z = r.Speech(role);
    if (z.is_proposal()) {
      standing = z.cycle();
      offset = 0;
    } else if (z.kind() != SpeechKind::kSilence) {
      standing.reset();
    }
    if (!standing) continue;
    const JointAction proposed = (*standing)[offset % standing->size()];
    ++covered;
    if (proposed.Of(role) != r.MoveOf(role)) ++lies;
    ++offset;
  }
  return covered == 0 ? 0.0 : static_cast<double>(lies) / covered;
}

double RepetitionFraction(const InteractionLog& log, Role role) {
  if (log.rounds.empty()) throw std::invalid_argument("repetition fraction of an empty log");
  int longest = 0;
  int run = 0;
  for (std::size_t t = 0; t < log.rounds.size(); ++t) {
    if (t > 0 && log.rounds[t].MoveOf(role) == log.rounds[t - 1].MoveOf(role)) {
      ++run;
    } else {
      run = 1;
    }
    longest = std::max(longest, run);
  }
  return static_cast<double>(longest) / static_cast<double>(log.rounds.size());
}

TTestResult PairedTTest(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("paired t-test: length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("paired t-test: need at least 2 pairs");
  const int n = static_cast<int>(xs.size());
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = xs[i] - ys[i];
  const double mean = Mean(d);
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1));
  TTestResult r;
  r.df = n - 1;
  if (sd == 0.0) {
    if (mean == 0.0) return r;
    r.t = mean > 0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
    r.p_two_tailed = 0.0;
    r.infinite_t = true;
    return r;
  }
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  r.p_two_tailed = StudentTTwoTailedP(r.t, r.df);
  return r;
}

ModelContext ModelContext::Build(const MatrixGame& game, Role modeled, double epsilon) {
  ModelContext ctx;
  ctx.modeled = modeled;
  ctx.roster = BuildExpertRoster(game, modeled);
  ctx.space = StateSpace(ctx.roster);
  ctx.models = BuildModels(ctx.roster, game, epsilon);
  ctx.prior = BuildPrior(ctx.roster, ctx.space);
  return ctx;
}

GamePredictions PredictGame(const InteractionLog& log, const ModelContext& ctx,
                            bool use_cheap_talk) {
  GamePredictions out;
  const FilterTrace trace =
      RunFilter(log, ctx.modeled, ctx.models, ctx.prior, use_cheap_talk);
  out.degenerate = trace.degenerate_count;
  for (int t = 0; t < static_cast<int>(log.size()); ++t) {
    BeliefState bel =
        PreActionBelief(trace, log, t, ctx.modeled, ctx.models, use_cheap_talk);
    out.action_map.push_back(PredictActionMap(bel, ctx.models));
    out.action_agg.push_back(PredictActionAgg(bel, ctx.space, ctx.models));
    out.plan_map.push_back(PredictPlanMap(bel, ctx.space));
    out.plan_agg.push_back(PredictPlanAgg(bel, ctx.space));
    out.intent_map.push_back(PredictIntentMap(bel, ctx.space));
    out.intent_agg.push_back(PredictIntentAgg(bel, ctx.space));
    out.beliefs.push_back(std::move(bel));
  }
  return out;
}

GroundTruth ReferenceTruth(const InteractionLog& log, const ModelContext& ctx) {
  GroundTruth truth;
  SharpAgentConfig config = DefaultSharpConfig(log.game, ctx.modeled);
  const std::vector<int> experts = TraceExperts(config, log, ctx.modeled);
  for (std::size_t t = 0; t < log.size(); ++t) {
    truth.actions.push_back(log.rounds[t].MoveOf(ctx.modeled));
    const ExpertFsm& e = config.roster.at(experts[t]);
    truth.plans.push_back(ExpertPlanType(e));
    truth.intents.push_back(ExpertIntentType(e));
  }
  return truth;
}

std::vector<EvalResult> Evaluate(const std::vector<InteractionLog>& corpus,
                                 const ModelContext& ctx, bool use_cheap_talk) {
  if (corpus.empty()) throw std::invalid_argument("evaluate: empty corpus");
  const char* ids[6] = {"action_map", "action_agg", "plan_map",
                        "plan_agg",   "intent_map", "intent_agg"};
  std::vector<EvalResult> results(6);
  for (int k = 0; k < 6; ++k) {
    results[k].predictor_id = ids[k];
    results[k].with_cheap_talk = use_cheap_talk;
  }
  for (const InteractionLog& log : corpus) {
    if (log.rounds.empty()) throw std::invalid_argument("evaluate: log '" + log.game_id + "' is empty");
    const GamePredictions p = PredictGame(log, ctx, use_cheap_talk);
    const GroundTruth truth = ReferenceTruth(log, ctx);
    const double acc[6] = {
        Accuracy(Values<Move>(p.action_map, &Prediction::action), truth.actions),
        Accuracy(Values<Move>(p.action_agg, &Prediction::action), truth.actions),
        Accuracy(Values<PlanType>(p.plan_map, &Prediction::plan), truth.plans),
        Accuracy(Values<PlanType>(p.plan_agg, &Prediction::plan), truth.plans),
        Accuracy(Values<IntentType>(p.intent_map, &Prediction::intent), truth.intents),
        Accuracy(Values<IntentType>(p.intent_agg, &Prediction::intent), truth.intents)};
    for (int k = 0; k < 6; ++k) {
      results[k].game_ids.push_back(log.game_id);
      results[k].per_game.push_back(acc[k]);
      results[k].degenerate_flags.push_back(p.degenerate);
    }
  }
  for (EvalResult& r : results) r.mean = Mean(r.per_game);
  return results;
}

std::string EvalCsv(const std::vector<EvalResult>& results) {
  std::ostringstream os;
  os << "game_id,predictor,with_cheap_talk,accuracy,degenerate_flags\n";
  for (const EvalResult& r : results) {
    for (std::size_t g = 0; g < r.per_game.size(); ++g) {
      os << r.game_ids[g] << ',' << r.predictor_id << ','
         << (r.with_cheap_talk ? "true" : "false") << ',' << Fixed(r.per_game[g])
         << ',' << r.degenerate_flags[g] << '\n';
    }
    os << "mean," << r.predictor_id << ',' << (r.with_cheap_talk ? "true" : "false")
       << ',' << Fixed(r.mean) << ",\n";
  }
  return os.str();
}

double BaselineAccuracy(StrategyId id, const InteractionLog& log, Role modeled) {
  const std::vector<JointAction> history = log.JointHistory();
  std::vector<Move> predicted;
  std::vector<Move> actual;
  std::vector<JointAction> prefix;
  for (const JointAction& joint : history) {
    predicted.push_back(BaselinePredict(id, prefix, modeled).move);
    actual.push_back(joint.Of(modeled));
    prefix.push_back(joint);
  }
  return Accuracy(predicted, actual);
}

ComparisonReport ComparePredictors(const std::vector<InteractionLog>& corpus,
                                   const ModelContext& ctx) {
  if (corpus.empty()) throw std::invalid_argument("compare: empty corpus");
  std::vector<InteractionLog> sorted = corpus;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const InteractionLog& a, const InteractionLog& b) {
                     return a.game_id < b.game_id;
                   });

  // Predictor label -> per-game accuracies, in corpus order.
  std::vector<std::string> labels;
  std::vector<bool> label_ct;
  std::vector<std::vector<double>> acc;
  std::vector<double> lying, repetition;

  for (bool ct : {true, false}) {
    labels.push_back(ModelLabel("map", ct));
    label_ct.push_back(ct);
    labels.push_back(ModelLabel("agg", ct));
    label_ct.push_back(ct);
  }
  for (StrategyId id : AllStrategies()) {
    labels.push_back(StrategyName(id));
    label_ct.push_back(false);
  }
  acc.assign(labels.size(), {});

  ComparisonReport report;
  for (const InteractionLog& log : sorted) {
    if (log.rounds.empty()) throw std::invalid_argument("compare: log '" + log.game_id + "' is empty");
    const double lr = LyingRate(log, ctx.modeled);
    const double rf = RepetitionFraction(log, ctx.modeled);
    lying.push_back(lr);
    repetition.push_back(rf);
    std::vector<Move> actual;
    for (const RoundRecord& r : log.rounds) actual.push_back(r.MoveOf(ctx.modeled));

    std::size_t k = 0;
    for (bool ct : {true, false}) {
      const GamePredictions p = PredictGame(log, ctx, ct);
      const double a_map = Accuracy(Values<Move>(p.action_map, &Prediction::action), actual);
      const double a_agg = Accuracy(Values<Move>(p.action_agg, &Prediction::action), actual);
      for (double a : {a_map, a_agg}) {
        acc[k].push_back(a);
        report.rows.push_back({log.game_id, labels[k].substr(0, 3), ct, a, lr, rf, p.degenerate});
        ++k;
      }
    }
    for (StrategyId id : AllStrategies()) {
      const double a = BaselineAccuracy(id, log, ctx.modeled);
      acc[k].push_back(a);
      report.rows.push_back({log.game_id, labels[k], false, a, lr, rf, 0});
      ++k;
    }
  }

  struct Subset {
    std::string name;
    std::vector<std::size_t> games;
  };
  std::vector<Subset> subsets = {{"all", {}}, {"honest", {}}, {"liars", {}}, {"variable", {}}};
  for (std::size_t g = 0; g < sorted.size(); ++g) {
    subsets[0].games.push_back(g);
    (lying[g] < kHonestLyingThreshold ? subsets[1] : subsets[2]).games.push_back(g);
    if (repetition[g] <= kVariableRepetitionThreshold) subsets[3].games.push_back(g);
  }

  auto pick = [&](std::size_t label, const Subset& s) {
    std::vector<double> out;
    for (std::size_t g : s.games) out.push_back(acc[label][g]);
    return out;
  };
  for (const Subset& s : subsets) {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::vector<double> v = pick(k, s);
      report.means.push_back({s.name, labels[k], static_cast<bool>(label_ct[k]),
                              static_cast<int>(v.size()), Mean(v)});
    }
    if (s.games.size() < 2) continue;
    auto add_test = [&](std::size_t a, std::size_t b) {
      const std::vector<double> xa = pick(a, s);
      const std::vector<double> xb = pick(b, s);
      report.tests.push_back({s.name, labels[a], labels[b], static_cast<int>(xa.size()),
                              Mean(xa), Mean(xb), PairedTTest(xa, xb)});
    };
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) add_test(a, b);
    }
    for (std::size_t b = 4; b < labels.size(); ++b) add_test(0, b);
  }
  return report;
}

std::string ComparisonReport::Csv() const {
  std::ostringstream os;
  os << "game_id,predictor,with_cheap_talk,accuracy,lying_rate,repetition_fraction,"
        "degenerate_flags\n";
  for (const ComparisonRow& r : rows) {
    os << r.game_id << ',' << r.predictor << ',' << (r.with_cheap_talk ? "true" : "false")
       << ',' << Fixed(r.accuracy) << ',' << Fixed(r.lying_rate) << ','
       << Fixed(r.repetition_fraction) << ',' << r.degenerate_flags << '\n';
  }
  return os.str();
}

std::string ComparisonReport::Summary() const {
  std::ostringstream os;
  std::string subset;
  for (const SubsetMean& m : means) {
    if (m.subset != subset) {
      subset = m.subset;
      os << "== " << subset << " (" << m.games << " games) ==\n";
    }
    if (m.games == 0) continue;
    char line[128];
    std::snprintf(line, sizeof(line), "  %-20s %8.4f\n", m.predictor.c_str(), m.mean);
    os << line;
  }
  os << "== paired t-tests (two-tailed) ==\n";
  for (const PairedComparison& c : tests) {
    char line[192];
    std::snprintf(line, sizeof(line), "  %-8s %-8s vs %-20s n=%-3d %.4f vs %.4f  t=%s df=%d p=%.4f\n",
                  c.subset.c_str(), c.a.c_str(), c.b.c_str(), c.games, c.mean_a, c.mean_b,
                  c.test.infinite_t ? (c.test.t > 0 ? "+inf" : "-inf")
                                    : Fixed(c.test.t, 4).c_str(),
                  c.test.df, c.test.p_two_tailed);
    os << line;
  }
  return os.str();
}

}  // namespace oppmodel

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

#include "cli.h"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oppmodel/errors.h"
#include "oppmodel/eval.h"
#include "oppmodel/experts.h"
#include "oppmodel/log_io.h"
#include "oppmodel/sim.h"

namespace oppmodel {
namespace {

struct Options {
  std::uint64_t seed = 0;
  double epsilon = kDefaultEpsilon;
  bool no_cheap_talk = false;
  double lie_prob = 0.0;
  std::string role = "row";
  std::string out;
  int games = 12;
  int rounds = 51;
  std::string log;
  std::string corpus;
  std::string beliefs_out;
  std::string summary_out;
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

int Simulate(const Options& o, std::ostream& out) {
  SimConfig config;
  config.games = o.games;
  config.rounds = o.rounds;
  config.seed = o.seed;
  config.cheap_talk = !o.no_cheap_talk;
  const auto corpus = GenerateCorpus(config, DefaultMatchups(config, o.lie_prob));
  Emit(o.out, WriteCorpus(corpus), out);
  return 0;
}

int Predict(const Options& o, std::ostream& out) {
  const std::vector<InteractionLog> logs = ReadCorpusFile(o.log);
  if (logs.empty()) throw std::invalid_argument("no games in '" + o.log + "'");
  const Role role = ParseRole(o.role);
  const bool ct = !o.no_cheap_talk;
  std::ostringstream csv;
  std::ostringstream beliefs;
  csv << "game_id,round,actual,action_map,action_map_conf,action_agg,action_agg_conf,"
         "plan_map,plan_map_conf,plan_agg,plan_agg_conf,intent_map,intent_map_conf,"
         "intent_agg,intent_agg_conf\n";
  beliefs << "game_id,round,state,probability\n";
  for (const InteractionLog& log : logs) {
    const ModelContext ctx = ModelContext::Build(log.game, role, o.epsilon);
    const GamePredictions p = PredictGame(log, ctx, ct);
    for (std::size_t t = 0; t < log.size(); ++t) {
      csv << log.game_id << ',' << t << ','
          << log.rounds[t].Action(role).Label();
      for (const Prediction* pr : {&p.action_map[t], &p.action_agg[t], &p.plan_map[t],
                                   &p.plan_agg[t], &p.intent_map[t], &p.intent_agg[t]}) {
        csv << ',' << pr->ValueLabel(role) << ',' << Num(pr->confidence);
      }
      csv << '\n';
      for (int s = 0; s < ctx.space.size(); ++s) {
        beliefs << log.game_id << ',' << t << ',' << ctx.space.Label(s) << ','
                << Num(p.beliefs[t].probs(s)) << '\n';
      }
    }
  }
  Emit(o.out, csv.str(), out);
  if (!o.beliefs_out.empty()) WriteTextFile(o.beliefs_out, beliefs.str());
  return 0;
}

int EvaluateCmd(const Options& o, std::ostream& out) {
  const std::vector<InteractionLog> corpus = ReadCorpusFile(o.corpus);
  if (corpus.empty()) throw std::invalid_argument("no games in '" + o.corpus + "'");
  const ModelContext ctx =
      ModelContext::Build(corpus.front().game, ParseRole(o.role), o.epsilon);
  Emit(o.out, EvalCsv(Evaluate(corpus, ctx, !o.no_cheap_talk)), out);
  return 0;
}

int Compare(const Options& o, std::ostream& out) {
  const std::vector<InteractionLog> corpus = ReadCorpusFile(o.corpus);
  if (corpus.empty()) throw std::invalid_argument("no games in '" + o.corpus + "'");
  const ModelContext ctx =
      ModelContext::Build(corpus.front().game, ParseRole(o.role), o.epsilon);
  const ComparisonReport report = ComparePredictors(corpus, ctx);
  if (o.out.empty()) {
    out << report.Csv() << '\n' << report.Summary();
  } else {
    WriteTextFile(o.out, report.Csv());
    out << report.Summary();
  }
  if (!o.summary_out.empty()) WriteTextFile(o.summary_out, report.Summary());
  return 0;
}

int Roster(const Options& o, std::ostream& out) {
  for (const ExpertFsm& e : BuildExpertRoster(PrisonersDilemma(), ParseRole(o.role))) {
    out << e.Dump() << '\n';
  }
  return 0;
}

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bayesian opponent model for repeated 2x2 games with cheap talk",
               "oppmodel"};
  app.require_subcommand(1, 1);

  auto add_role = [&](CLI::App* sub) {
    sub->add_option("--role", o.role, "Modeled seat")
        ->check(CLI::IsMember({"row", "col"}))
        ->capture_default_str();
  };
  auto add_epsilon = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "Smoothing mass, in (0, 0.2]")
        ->check(CLI::Range(1e-12, 0.2))
        ->capture_default_str();
  };
  auto add_ct = [&](CLI::App* sub) {
    sub->add_flag("--no-cheap-talk", o.no_cheap_talk, "Ignore speech");
  };
  auto add_out = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--out", o.out, what + " (default: stdout)");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "Generate a seeded .ijl corpus");
  simulate->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  simulate->add_option("--games", o.games, "Number of games")
      ->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--rounds", o.rounds, "Rounds per game")
      ->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--lie-prob", o.lie_prob, "Reference agent lying probability")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  add_ct(simulate);
  add_out(simulate, "Corpus path");

  CLI::App* predict = app.add_subcommand("predict", "Per-round predictions for a log");
  predict->add_option("--log", o.log, "Input .ijl file")->required();
  add_role(predict);
  add_epsilon(predict);
  add_ct(predict);
  add_out(predict, "Prediction CSV path");
  predict->add_option("--beliefs-out", o.beliefs_out, "Per-round belief CSV path");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Accuracy of the model predictors");
  evaluate->add_option("--corpus", o.corpus, "Input .ijl corpus")->required();
  add_role(evaluate);
  add_epsilon(evaluate);
  add_ct(evaluate);
  add_out(evaluate, "Result CSV path");

  CLI::App* compare = app.add_subcommand("compare", "Compare against fixed strategies");
  compare->add_option("--corpus", o.corpus, "Input .ijl corpus")->required();
  add_role(compare);
  add_epsilon(compare);
  add_out(compare, "Report CSV path");
  compare->add_option("--summary-out", o.summary_out, "Summary text path");

  CLI::App* roster = app.add_subcommand("roster", "Dump the expert state machines");
  add_role(roster);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << OneLine(e.what()) << '\n';
    return 1;
  }

  try {
    if (*simulate) return Simulate(o, out);
    if (*predict) return Predict(o, out);
    if (*evaluate) return EvaluateCmd(o, out);
    if (*compare) return Compare(o, out);
    if (*roster) return Roster(o, out);
  } catch (const InvariantError& e) {
    err << "internal error: " << OneLine(e.what()) << '\n';
    return 2;
  } catch (const LogFormatError& e) {
    err << "error: " << OneLine(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << OneLine(e.what()) << '\n';
    return 1;
  }
  return 1;
}

}  // namespace oppmodel

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

#include "oppmodel/sim.h"

#include <cstdio>
#include <memory>
#include <stdexcept>

namespace oppmodel {
namespace {

double UnitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class Player {
 public:
  virtual ~Player() = default;
  virtual SpeechAct Speak(const InteractionLog& history) = 0;
  virtual Move Act(const InteractionLog& history,
                   const SpeechAct& partner_speech) = 0;
  virtual void Observe(const RoundRecord& round) = 0;
};

class SharpPlayer : public Player {
 public:
  SharpPlayer(const SharpLikeSpec& spec, const MatrixGame& game, Role role,
              std::uint64_t seed)
      : agent_(spec.config, game, role, seed) {}
  SpeechAct Speak(const InteractionLog&) override { return agent_.Speak(); }
  Move Act(const InteractionLog&, const SpeechAct& partner_speech) override {
    return agent_.Act(partner_speech).move;
  }
  void Observe(const RoundRecord& round) override { agent_.Observe(round); }

 private:
  SharpAgent agent_;
};

class FixedPlayer : public Player {
 public:
  FixedPlayer(StrategyId id, Role role) : id_(id), role_(role) {}
  SpeechAct Speak(const InteractionLog&) override { return SpeechAct::Silence(); }
  Move Act(const InteractionLog& history, const SpeechAct&) override {
    return StrategyNextAction(id_, history.JointHistory(), role_).move;
  }
  void Observe(const RoundRecord&) override {}

 private:
  StrategyId id_;
  Role role_;
};

class ReplayPlayer : public Player {
 public:
  ReplayPlayer(const ReplaySpec& spec, Role seat) : spec_(spec), seat_(seat) {}
  SpeechAct Speak(const InteractionLog& history) override {
    return spec_.log.rounds.at(history.size()).Speech(spec_.role);
  }
  Move Act(const InteractionLog& history, const SpeechAct&) override {
    return spec_.log.rounds.at(history.size()).MoveOf(spec_.role);
  }
  void Observe(const RoundRecord&) override {}

 private:
  ReplaySpec spec_;
  Role seat_;
};

std::unique_ptr<Player> MakePlayer(const AgentSpec& spec, const MatrixGame& game,
                                   Role role, std::uint64_t seed,
                                   const SimConfig& config) {
  if (const auto* s = std::get_if<SharpLikeSpec>(&spec.kind)) {
    return std::make_unique<SharpPlayer>(*s, game, role, seed);
  }
  if (const auto* f = std::get_if<FixedSpec>(&spec.kind)) {
    return std::make_unique<FixedPlayer>(f->strategy, role);
  }
  const auto& r = std::get<ReplaySpec>(spec.kind);
  if (static_cast<int>(r.log.size()) < config.rounds) {
    throw std::invalid_argument(
        "replay log '" + r.log.game_id + "' has " + std::to_string(r.log.size()) +
        " rounds, fewer than the " + std::to_string(config.rounds) + " requested");
  }
  return std::make_unique<ReplayPlayer>(r, role);
}

void CheckSpec(const AgentSpec& spec) {
  if (!(spec.lie_prob >= 0.0 && spec.lie_prob <= 1.0)) {
    throw std::invalid_argument("lie probability must be in [0, 1]");
  }
}

}  // namespace

AgentSpec AgentSpec::SharpLike(SharpAgentConfig config, double lie_prob,
                               std::uint64_t seed) {
  return {SharpLikeSpec{std::move(config)}, lie_prob, seed};
}

AgentSpec AgentSpec::Fixed(StrategyId strategy, std::uint64_t seed) {
  return {FixedSpec{strategy}, 0.0, seed};
}

AgentSpec AgentSpec::Replay(InteractionLog log, Role role) {
  return {ReplaySpec{std::move(log), role}, 0.0, 0};
}

std::string AgentSpec::Describe() const {
  if (std::holds_alternative<SharpLikeSpec>(kind)) return "SharpLike";
  if (const auto* f = std::get_if<FixedSpec>(&kind)) return StrategyName(f->strategy);
  const auto& r = std::get<ReplaySpec>(kind);
  return "Replay(" + r.log.game_id + "/" + RoleName(r.role) + ")";
}

void SimConfig::Validate() const {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (games < 1) throw std::invalid_argument("games must be >= 1");
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ActionId ApplyLie(const SpeechAct& speech, ActionId action, double lie_prob,
                  std::mt19937_64& rng) {
  if (!speech.is_proposal()) return action;
  Move proposed = speech.cycle().front().Of(action.role);
  if (lie_prob > 0.0 && UnitDraw(rng) < lie_prob) return {action.role, Flip(proposed)};
  return {action.role, proposed};
}

namespace internal {

InteractionLog RunGameOrdered(const AgentSpec& row, const AgentSpec& col,
                              const SimConfig& config, const std::string& game_id,
                              bool column_first) {
  config.Validate();
  CheckSpec(row);
  CheckSpec(col);
  InteractionLog log;
  log.game_id = game_id;
  const MatrixGame& game = log.game;

  const std::uint64_t row_seed = DeriveSeed(config.seed ^ row.seed, 0);
  const std::uint64_t col_seed = DeriveSeed(config.seed ^ col.seed, 1);
  std::unique_ptr<Player> players[2] = {
      MakePlayer(row, game, Role::kRow, row_seed, config),
      MakePlayer(col, game, Role::kColumn, col_seed, config)};
  const AgentSpec* specs[2] = {&row, &col};
  std::mt19937_64 lie_rng[2] = {std::mt19937_64(DeriveSeed(row_seed, 2)),
                                std::mt19937_64(DeriveSeed(col_seed, 2))};

  for (int t = 0; t < config.rounds; ++t) {
    SpeechAct said[2];
    for (int p : {0, 1}) {
      said[p] = players[p]->Speak(log);
      if (!config.cheap_talk) said[p] = SpeechAct::Silence();
    }
    Move moves[2];
    const int order[2] = {column_first ? 1 : 0, column_first ? 0 : 1};
    for (int p : order) {
      Role role = static_cast<Role>(p);
      ActionId action{role, players[p]->Act(log, said[1 - p])};
      if (specs[p]->lie_prob > 0.0) {
        action = ApplyLie(said[p], action, specs[p]->lie_prob, lie_rng[p]);
      }
      moves[p] = action.move;
    }
    log.Append(said[0], said[1], JointAction{moves[0], moves[1]});
    for (int p : order) players[p]->Observe(log.rounds.back());
  }
  return log;
}

}  // namespace internal

InteractionLog RunGame(const AgentSpec& row, const AgentSpec& col,
                       const SimConfig& config, const std::string& game_id) {
  return internal::RunGameOrdered(row, col, config, game_id, false);
}

std::vector<InteractionLog> GenerateCorpus(
    const SimConfig& config,
    const std::vector<std::pair<AgentSpec, AgentSpec>>& matchups) {
  config.Validate();
  if (matchups.empty()) throw std::invalid_argument("no matchups");
  std::vector<InteractionLog> corpus;
  corpus.reserve(matchups.size());
  for (std::size_t k = 0; k < matchups.size(); ++k) {
    SimConfig game_config = config;
    game_config.seed = DeriveSeed(config.seed, k);
    char id[16];
    std::snprintf(id, sizeof(id), "g%03zu", k);
    corpus.push_back(RunGame(matchups[k].first, matchups[k].second, game_config, id));
  }
  return corpus;
}

std::vector<std::pair<AgentSpec, AgentSpec>> DefaultMatchups(
    const SimConfig& config, double lie_prob) {
  config.Validate();
  std::vector<StrategyId> order = AllStrategies();
  // Fisher-Yates with a portable draw so the order is stable across
  // standard libraries.
  std::mt19937_64 rng(DeriveSeed(config.seed, 0xC0FFEE));
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(UnitDraw(rng) * (i + 1));
    std::swap(order[i], order[j]);
  }
  const SharpAgentConfig sharp = DefaultSharpConfig(PrisonersDilemma(), Role::kRow);
  std::vector<std::pair<AgentSpec, AgentSpec>> matchups;
  for (int k = 0; k < config.games; ++k) {
    matchups.emplace_back(AgentSpec::SharpLike(sharp, lie_prob),
                          AgentSpec::Fixed(order[k % order.size()]));
  }
  return matchups;
}

}  // namespace oppmodel

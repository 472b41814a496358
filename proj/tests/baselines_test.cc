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

#include "oppmodel/baselines.h"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.h"

namespace oppmodel {
namespace {

using S = StrategyId;

std::vector<JointAction> H(std::initializer_list<const char*> labels) {
  std::vector<JointAction> out;
  for (const char* l : labels) out.push_back(ParseJointAction(l));
  return out;
}

TEST_CASE("there are 21 strategies with stable names") {
  CHECK(AllStrategies().size() == kNumStrategies);
  std::set<std::string> names;
  for (S id : AllStrategies()) {
    names.insert(StrategyName(id));
    CHECK(ParseStrategy(StrategyName(id)) == id);
  }
  CHECK(names.size() == kNumStrategies);
  CHECK_THROWS(ParseStrategy("Bouncer"));
}

TEST_CASE("table rules") {
  CHECK(StrategyNextAction(S::kTFT, {}).move == Move::kCooperate);
  CHECK(StrategyNextAction(S::kTFT, H({"AD"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kAlternator, H({"AC", "AC"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kAlternator, H({"AC"})).move == Move::kCooperate);
  CHECK(StrategyNextAction(S::kGrim, H({"BC", "AC", "AC"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kGrim, H({"AC", "AC"})).move == Move::kCooperate);
  CHECK(StrategyNextAction(S::kWSLS, H({"AD"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kWSLS, H({"BD"})).move == Move::kCooperate);
  CHECK(StrategyNextAction(S::kAlwaysDefect, {}).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kTF2T, H({"AD"})).move == Move::kCooperate);
  CHECK(StrategyNextAction(S::kTF2T, H({"AD", "AD"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kTF3T, H({"AD", "AD"})).move == Move::kCooperate);
  CHECK(StrategyNextAction(S::kTF3T, H({"AD", "AD", "AD"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kTwoTitsForOneTat, H({"AD", "BC"})).move == Move::kDefect);
  CHECK(StrategyNextAction(S::kTFT, H({"AC"}), Role::kColumn).role == Role::kColumn);
  CHECK(StrategyNextAction(S::kTFT, H({"BC"}), Role::kColumn).move == Move::kDefect);
}

TEST_CASE("baseline predictions of openings") {
  CHECK(BaselinePredict(S::kExplTFT, {}, Role::kRow).move == Move::kDefect);
  CHECK(BaselinePredict(S::kPavlov, {}, Role::kColumn).move == Move::kCooperate);
  CHECK(BaselinePredict(S::kExplTFT, {}, Role::kColumn).role == Role::kColumn);
}

// Plays `x` in the column seat against `opponent` and scores the baseline
// predictor for `x` on that seat.
int SelfPredictionMisses(S x, S opponent, int rounds) {
  std::vector<JointAction> history;
  int misses = 0;
  for (int t = 0; t < rounds; ++t) {
    Move predicted = BaselinePredict(x, history, Role::kColumn).move;
    Move col = StrategyNextAction(x, history, Role::kColumn).move;
    Move row = StrategyNextAction(opponent, history, Role::kRow).move;
    if (t >= 1 && predicted != col) ++misses;
    history.push_back({row, col});
  }
  return misses;
}

TEST_CASE("self prediction is exact") {
  for (S x : AllStrategies()) {
    for (S opponent : AllStrategies()) {
      CHECK_MESSAGE(SelfPredictionMisses(x, opponent, 51) == 0,
                    StrategyName(x) << " vs " << StrategyName(opponent));
    }
  }
}

TEST_CASE("decisions depend only on the last three rounds") {
  std::mt19937_64 rng(99);
  auto random_joint = [&] { return JointAction::FromIndex(static_cast<int>(rng() % 4)); };
  for (S id : AllStrategies()) {
    if (HasUnboundedMemory(id)) continue;
    for (int trial = 0; trial < 300; ++trial) {
      const int len = 4 + static_cast<int>(rng() % 10);
      std::vector<JointAction> a(len);
      for (auto& j : a) j = random_joint();
      std::vector<JointAction> b = a;
      for (int i = 0; i < len - 3; ++i) b[i] = random_joint();
      for (Role role : {Role::kRow, Role::kColumn}) {
        CHECK_MESSAGE(StrategyNextAction(id, a, role) == StrategyNextAction(id, b, role),
                      StrategyName(id));
      }
    }
  }
}

TEST_CASE("grim family remembers forever") {
  std::vector<JointAction> h = H({"AD"});
  for (int i = 0; i < 20; ++i) h.push_back(ParseJointAction("AC"));
  CHECK(StrategyNextAction(S::kGrim, h).move == Move::kDefect);
}

}  // namespace
}  // namespace oppmodel

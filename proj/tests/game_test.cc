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

#include "oppmodel/game.h"

#include <stdexcept>

#include "doctest.h"

namespace oppmodel {
namespace {

JointAction J(const char* label) { return ParseJointAction(label); }

TEST_CASE("prisoners dilemma payoffs") {
  const MatrixGame& pd = PrisonersDilemma();
  CHECK(Payoff(pd, J("AC")) == PayoffPair{60, 60});
  CHECK(Payoff(pd, J("BC")) == PayoffPair{100, 0});
  CHECK(Payoff(pd, J("BD")) == PayoffPair{20, 20});
  CHECK(Payoff(pd, J("AD")) == PayoffPair{0, 100});
}

TEST_CASE("cooperation flags follow labels") {
  CHECK(IsCooperate(ParseAction('A')));
  CHECK(IsCooperate(ParseAction('C')));
  CHECK_FALSE(IsCooperate(ParseAction('B')));
  CHECK_FALSE(IsCooperate(ParseAction('D')));
  CHECK(ParseAction('D').role == Role::kColumn);
  CHECK_THROWS_AS(ParseAction('E'), std::invalid_argument);
}

TEST_CASE("defection strictly dominates in the one-shot game") {
  const MatrixGame& pd = PrisonersDilemma();
  for (Role self : {Role::kRow, Role::kColumn}) {
    for (Move other : {Move::kCooperate, Move::kDefect}) {
      CHECK(pd.PayoffFor(self, Move::kDefect, other) >
            pd.PayoffFor(self, Move::kCooperate, other));
    }
  }
  CHECK(pd.MaximinMove(Role::kRow) == Move::kDefect);
  CHECK(pd.MaximinValue(Role::kColumn) == 20);
  CHECK(pd.PunishMove(Role::kRow) == Move::kDefect);
}

TEST_CASE("joint action labels and perspectives") {
  for (int i = 0; i < 4; ++i) {
    JointAction j = JointAction::FromIndex(i);
    CHECK(j.Index() == i);
    CHECK(ParseJointAction(j.Label()) == j);
  }
  CHECK(J("BC").Label() == "BC");
  CHECK(JointAction::FromPerspective(Role::kColumn, Move::kDefect, Move::kCooperate) ==
        J("AD"));
  CHECK_THROWS_AS(ParseJointAction("CA"), std::invalid_argument);
  CHECK(ParseRole("col") == Role::kColumn);
  CHECK_THROWS_AS(ParseRole("diag"), std::invalid_argument);
}

}  // namespace
}  // namespace oppmodel

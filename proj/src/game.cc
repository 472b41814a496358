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

#include <algorithm>
#include <stdexcept>

namespace oppmodel {

Role Other(Role role) {
  return role == Role::kRow ? Role::kColumn : Role::kRow;
}

std::string RoleName(Role role) { return role == Role::kRow ? "row" : "col"; }

Role ParseRole(const std::string& name) {
  if (name == "row") return Role::kRow;
  if (name == "col" || name == "column") return Role::kColumn;
  throw std::invalid_argument("unknown role '" + name + "' (want row|col)");
}

Move Flip(Move move) {
  return move == Move::kCooperate ? Move::kDefect : Move::kCooperate;
}

char ActionId::Label() const {
  if (role == Role::kRow) return move == Move::kCooperate ? 'A' : 'B';
  return move == Move::kCooperate ? 'C' : 'D';
}

bool IsCooperate(ActionId action) { return action.move == Move::kCooperate; }

ActionId ParseAction(char label) {
  switch (label) {
    case 'A': return {Role::kRow, Move::kCooperate};
    case 'B': return {Role::kRow, Move::kDefect};
    case 'C': return {Role::kColumn, Move::kCooperate};
    case 'D': return {Role::kColumn, Move::kDefect};
  }
  throw std::invalid_argument(std::string("unknown action label '") + label +
                              "'");
}

std::string JointAction::Label() const {
  return {RowAction().Label(), ColAction().Label()};
}

JointAction JointAction::FromIndex(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("joint action index");
  return {static_cast<Move>(index / 2), static_cast<Move>(index % 2)};
}

JointAction JointAction::FromPerspective(Role self, Move own, Move other) {
  return self == Role::kRow ? JointAction{own, other}
                            : JointAction{other, own};
}

JointAction ParseJointAction(const std::string& label) {
  if (label.size() != 2) {
    throw std::invalid_argument("joint action must be two letters: '" +
                                label + "'");
  }
  ActionId r = ParseAction(label[0]);
  ActionId c = ParseAction(label[1]);
  if (r.role != Role::kRow || c.role != Role::kColumn) {
    throw std::invalid_argument("joint action must be row then column: '" +
                                label + "'");
  }
  return {r.move, c.move};
}

MatrixGame::MatrixGame(std::string name, std::array<PayoffPair, 4> payoffs)
    : name_(std::move(name)), payoffs_(payoffs) {}

Points MatrixGame::PayoffFor(Role self, Move own, Move other) const {
  return Payoff(JointAction::FromPerspective(self, own, other)).Of(self);
}

Move MatrixGame::MaximinMove(Role self) const {
  Points best = 0;
  Move arg = Move::kCooperate;
  bool first = true;
  for (Move own : {Move::kCooperate, Move::kDefect}) {
    Points worst = std::min(PayoffFor(self, own, Move::kCooperate),
                            PayoffFor(self, own, Move::kDefect));
    if (first || worst > best) {
      best = worst;
      arg = own;
      first = false;
    }
  }
  return arg;
}

Points MatrixGame::MaximinValue(Role self) const {
  Move m = MaximinMove(self);
  return std::min(PayoffFor(self, m, Move::kCooperate),
                  PayoffFor(self, m, Move::kDefect));
}

Move MatrixGame::PunishMove(Role self) const {
  Role partner = Other(self);
  Points best = 0;
  Move arg = Move::kCooperate;
  bool first = true;
  for (Move own : {Move::kCooperate, Move::kDefect}) {
    Points partner_best = std::max(PayoffFor(partner, Move::kCooperate, own),
                                   PayoffFor(partner, Move::kDefect, own));
    if (first || partner_best < best) {
      best = partner_best;
      arg = own;
      first = false;
    }
  }
  return arg;
}

const MatrixGame& PrisonersDilemma() {
  static const MatrixGame kGame("prisoners_dilemma",
                                {PayoffPair{60, 60}, PayoffPair{0, 100},
                                 PayoffPair{100, 0}, PayoffPair{20, 20}});
  return kGame;
}

PayoffPair Payoff(const MatrixGame& game, JointAction joint) {
  return game.Payoff(joint);
}

}  // namespace oppmodel

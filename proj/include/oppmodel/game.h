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

#ifndef OPPMODEL_GAME_H_
#define OPPMODEL_GAME_H_

#include <array>
#include <string>
#include <utility>

namespace oppmodel {

enum class Role { kRow = 0, kColumn = 1 };

Role Other(Role role);
std::string RoleName(Role role);  // "row" / "col"
Role ParseRole(const std::string& name);

enum class Move { kCooperate = 0, kDefect = 1 };

Move Flip(Move move);

// An action for one seat. Row actions are labelled A (cooperate) and B
// (defect); column actions C (cooperate) and D (defect).
struct ActionId {
  Role role = Role::kRow;
  Move move = Move::kCooperate;

  char Label() const;
  bool operator==(const ActionId&) const = default;
};

bool IsCooperate(ActionId action);
ActionId ParseAction(char label);  // Throws std::invalid_argument.

// A joint play, always stored in (row, column) order so the role invariant
// holds by construction.
struct JointAction {
  Move row = Move::kCooperate;
  Move col = Move::kCooperate;

  ActionId RowAction() const { return {Role::kRow, row}; }
  ActionId ColAction() const { return {Role::kColumn, col}; }
  Move Of(Role role) const { return role == Role::kRow ? row : col; }
  std::string Label() const;  // e.g. "AC", "BD"
  int Index() const { return 2 * static_cast<int>(row) + static_cast<int>(col); }

  static JointAction FromIndex(int index);
  // Joint action where `self` plays `own` and the other seat plays `other`.
  static JointAction FromPerspective(Role self, Move own, Move other);
  bool operator==(const JointAction&) const = default;
};

JointAction ParseJointAction(const std::string& label);

using Points = int;

struct PayoffPair {
  Points row = 0;
  Points col = 0;

  Points Of(Role role) const { return role == Role::kRow ? row : col; }
  bool operator==(const PayoffPair&) const = default;
};

// 2x2 matrix game. Immutable after construction.
class MatrixGame {
 public:
  // `payoffs` indexed by JointAction::Index(): AC, AD, BC, BD.
  MatrixGame(std::string name, std::array<PayoffPair, 4> payoffs);

  const std::string& name() const { return name_; }
  PayoffPair Payoff(JointAction joint) const { return payoffs_[joint.Index()]; }
  const std::array<PayoffPair, 4>& payoffs() const { return payoffs_; }

  // Payoff for `self` when it plays `own` and the partner plays `other`.
  Points PayoffFor(Role self, Move own, Move other) const;

  // The move maximizing `self`'s worst-case payoff (ties toward cooperate).
  Move MaximinMove(Role self) const;
  Points MaximinValue(Role self) const;
  // The move minimizing the partner's best-reply payoff.
  Move PunishMove(Role self) const;

  bool operator==(const MatrixGame&) const = default;

 private:
  std::string name_;
  std::array<PayoffPair, 4> payoffs_;
};

// The Prisoner's Dilemma: temptation 100, reward 60, punishment 20, sucker 0.
const MatrixGame& PrisonersDilemma();

PayoffPair Payoff(const MatrixGame& game, JointAction joint);

}  // namespace oppmodel

#endif  // OPPMODEL_GAME_H_

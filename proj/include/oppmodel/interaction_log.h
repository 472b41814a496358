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

#ifndef OPPMODEL_INTERACTION_LOG_H_
#define OPPMODEL_INTERACTION_LOG_H_

#include <string>
#include <vector>

#include "oppmodel/game.h"
#include "oppmodel/speech.h"

namespace oppmodel {

struct RoundRecord {
  int round = 0;
  SpeechAct z_row;
  SpeechAct z_col;
  JointAction joint;
  PayoffPair payoff;

  const SpeechAct& Speech(Role role) const {
    return role == Role::kRow ? z_row : z_col;
  }
  Move MoveOf(Role role) const { return joint.Of(role); }
  ActionId Action(Role role) const { return {role, joint.Of(role)}; }

  bool operator==(const RoundRecord&) const = default;
};

// One repeated game between two seats.
struct InteractionLog {
  std::string game_id;
  MatrixGame game = PrisonersDilemma();
  std::vector<RoundRecord> rounds;

  std::size_t size() const { return rounds.size(); }
  // Appends a round, filling in the index and the payoffs from the game.
  void Append(const SpeechAct& z_row, const SpeechAct& z_col,
              JointAction joint);
  std::vector<JointAction> JointHistory() const;

  bool operator==(const InteractionLog&) const = default;
};

}  // namespace oppmodel

#endif  // OPPMODEL_INTERACTION_LOG_H_

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

#ifndef OPPMODEL_SPEECH_H_
#define OPPMODEL_SPEECH_H_

#include <string>
#include <vector>

#include "oppmodel/game.h"

namespace oppmodel {

enum class SpeechKind {
  kPropose = 0,
  kThreat,
  kPraise,
  kInsult,
  kForgive,
  kAccuse,
  kSilence,
};

inline constexpr int kNumSpeechKinds = 7;

std::string SpeechKindName(SpeechKind kind);
SpeechKind ParseSpeechKind(const std::string& name);

// A cyclic plan of one or two joint actions. Element 0 is the joint action
// proposed for the round in which the plan is spoken.
using PlanCycle = std::vector<JointAction>;

// True if both cycles describe the same repeating sequence, up to rotation.
bool SameCycle(const PlanCycle& a, const PlanCycle& b);
PlanCycle Rotate(const PlanCycle& cycle, int steps);
std::string CycleLabel(const PlanCycle& cycle);  // "AC", "AC-BC"

// One cheap-talk message. The cycle is present iff kind == kPropose.
class SpeechAct {
 public:
  SpeechAct() = default;  // Silence.

  static SpeechAct Silence() { return SpeechAct(); }
  static SpeechAct Of(SpeechKind kind);  // Any kind except kPropose.
  static SpeechAct Propose(PlanCycle cycle);

  SpeechKind kind() const { return kind_; }
  const PlanCycle& cycle() const { return cycle_; }
  bool is_proposal() const { return kind_ == SpeechKind::kPropose; }

  std::string ToString() const;
  bool operator==(const SpeechAct&) const = default;

 private:
  SpeechKind kind_ = SpeechKind::kSilence;
  PlanCycle cycle_;
};

// The closed observation alphabet used by the conditional models: the six
// non-proposal kinds plus every distinct proposal cycle (4 pure plays and 12
// ordered alternations).
inline constexpr int kNumSpeechSymbols = 22;

int SpeechSymbol(const SpeechAct& speech);
SpeechAct SpeechFromSymbol(int symbol);

}  // namespace oppmodel

#endif  // OPPMODEL_SPEECH_H_

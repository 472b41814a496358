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

#include "oppmodel/speech.h"

#include <array>
#include <stdexcept>

namespace oppmodel {
namespace {

constexpr std::array<const char*, kNumSpeechKinds> kKindNames = {
    "Propose", "Threat", "Praise", "Insult", "Forgive", "Accuse", "Silence"};

// Symbols 0..5 are Threat..Silence, 6..9 pure proposals, 10..21 alternations.
constexpr int kFirstPureSymbol = kNumSpeechKinds - 1;
constexpr int kFirstAltSymbol = kFirstPureSymbol + 4;

}  // namespace

std::string SpeechKindName(SpeechKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

SpeechKind ParseSpeechKind(const std::string& name) {
  for (int k = 0; k < kNumSpeechKinds; ++k) {
    if (name == kKindNames[k]) return static_cast<SpeechKind>(k);
  }
  throw std::invalid_argument("unknown speech kind '" + name + "'");
}

bool SameCycle(const PlanCycle& a, const PlanCycle& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (Rotate(a, static_cast<int>(r)) == b) return true;
  }
  return false;
}

PlanCycle Rotate(const PlanCycle& cycle, int steps) {
  if (cycle.empty()) return cycle;
  PlanCycle out(cycle.size());
  const int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) out[i] = cycle[((i + steps) % n + n) % n];
  return out;
}

std::string CycleLabel(const PlanCycle& cycle) {
  std::string out;
  for (const JointAction& j : cycle) {
    if (!out.empty()) out += '-';
    out += j.Label();
  }
  return out;
}

SpeechAct SpeechAct::Of(SpeechKind kind) {
  if (kind == SpeechKind::kPropose) {
    throw std::invalid_argument("a proposal needs a plan cycle");
  }
  SpeechAct s;
  s.kind_ = kind;
  return s;
}

SpeechAct SpeechAct::Propose(PlanCycle cycle) {
  if (cycle.empty() || cycle.size() > 2) {
    throw std::invalid_argument("proposal cycle length must be 1 or 2");
  }
  if (cycle.size() == 2 && cycle[0] == cycle[1]) cycle.resize(1);
  SpeechAct s;
  s.kind_ = SpeechKind::kPropose;
  s.cycle_ = std::move(cycle);
  return s;
}

std::string SpeechAct::ToString() const {
  if (!is_proposal()) return SpeechKindName(kind_);
  return "Propose(" + CycleLabel(cycle_) + ")";
}

int SpeechSymbol(const SpeechAct& speech) {
  if (!speech.is_proposal()) return static_cast<int>(speech.kind()) - 1;
  const PlanCycle& c = speech.cycle();
  if (c.size() == 1) return kFirstPureSymbol + c[0].Index();
  // Ordered pairs of distinct joint actions, enumerated row-major with the
  // diagonal removed.
  int first = c[0].Index();
  int second = c[1].Index();
  int column = second < first ? second : second - 1;
  return kFirstAltSymbol + 3 * first + column;
}

SpeechAct SpeechFromSymbol(int symbol) {
  if (symbol < 0 || symbol >= kNumSpeechSymbols) {
    throw std::out_of_range("speech symbol");
  }
  if (symbol < kFirstPureSymbol) {
    return SpeechAct::Of(static_cast<SpeechKind>(symbol + 1));
  }
  if (symbol < kFirstAltSymbol) {
    return SpeechAct::Propose({JointAction::FromIndex(symbol - kFirstPureSymbol)});
  }
  int offset = symbol - kFirstAltSymbol;
  int first = offset / 3;
  int column = offset % 3;
  int second = column < first ? column : column + 1;
  return SpeechAct::Propose(
      {JointAction::FromIndex(first), JointAction::FromIndex(second)});
}

}  // namespace oppmodel

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

#include <array>
#include <stdexcept>

namespace oppmodel {
namespace {

using History = std::vector<std::pair<Move, Move>>;

constexpr Move C = Move::kCooperate;
constexpr Move D = Move::kDefect;

constexpr std::array<const char*, kNumStrategies> kNames = {
    "AlwaysCooperate", "TFT",          "TF2T",         "TF3T",
    "TwoTitsForOneTat", "TwoTitsForTwoTats", "T2",     "Grim",
    "LenientGrim2",    "LenientGrim3", "WSLS",         "PerfectTFT2",
    "AlwaysDefect",    "FalseCooperator", "ExplTFT",   "ExplTF2T",
    "ExplTF3T",        "ExplGrim2",    "ExplGrim3",    "Alternator",
    "Pavlov"};

// Partner's move `back` rounds ago (1 = last round); C before the game began.
Move PartnerAgo(const History& h, std::size_t back) {
  return back <= h.size() ? h[h.size() - back].second : C;
}

bool AnyDefect(const std::pair<Move, Move>& round) {
  return round.first == D || round.second == D;
}

// D iff the partner defected in each of the last `n` rounds.
Move TitForNTats(const History& h, std::size_t n) {
  if (h.size() < n) return C;
  for (std::size_t k = 1; k <= n; ++k) {
    if (PartnerAgo(h, k) != D) return C;
  }
  return D;
}

// D forever once `n` consecutive rounds each contained a defection.
Move LenientGrim(const History& h, int n) {
  int run = 0;
  for (const auto& r : h) {
    run = AnyDefect(r) ? run + 1 : 0;
    if (run >= n) return D;
  }
  return C;
}

Move WinStayLoseShift(const History& h) {
  if (h.empty()) return C;
  return h.back().first == h.back().second ? C : D;
}

Move T2(const History& h) {
  int punish_left = 0;
  for (const auto& r : h) {
    if (punish_left > 0) {
      --punish_left;
    } else if (AnyDefect(r)) {
      punish_left = 2;
    }
  }
  return punish_left > 0 ? D : C;
}

Move PerfectTFT2(const History& h) {
  if (h.empty()) return C;
  auto both = [](const std::pair<Move, Move>& r, Move m) {
    return r.first == m && r.second == m;
  };
  const std::pair<Move, Move> cc{C, C};
  const auto& last = h.back();
  const auto& before = h.size() >= 2 ? h[h.size() - 2] : cc;
  if (both(last, C) && both(before, C)) return C;
  if (both(last, D) && both(before, D)) return C;
  if (both(last, C) && both(before, D)) return C;
  return D;
}

}  // namespace

const std::vector<StrategyId>& AllStrategies() {
  static const std::vector<StrategyId> kAll = [] {
    std::vector<StrategyId> v;
    for (int i = 0; i < kNumStrategies; ++i) v.push_back(static_cast<StrategyId>(i));
    return v;
  }();
  return kAll;
}

std::string StrategyName(StrategyId id) { return kNames[static_cast<int>(id)]; }

StrategyId ParseStrategy(const std::string& name) {
  for (int i = 0; i < kNumStrategies; ++i) {
    if (name == kNames[i]) return static_cast<StrategyId>(i);
  }
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

bool HasUnboundedMemory(StrategyId id) {
  switch (id) {
    case StrategyId::kGrim:
    case StrategyId::kLenientGrim2:
    case StrategyId::kLenientGrim3:
    case StrategyId::kExplGrim2:
    case StrategyId::kExplGrim3:
    case StrategyId::kT2:
      return true;
    default:
      return false;
  }
}

Move StrategyMove(StrategyId id, const History& h) {
  const bool first = h.empty();
  switch (id) {
    case StrategyId::kAlwaysCooperate: return C;
    case StrategyId::kTFT: return TitForNTats(h, 1);
    case StrategyId::kTF2T: return TitForNTats(h, 2);
    case StrategyId::kTF3T: return TitForNTats(h, 3);
    case StrategyId::kTwoTitsForOneTat:
      return PartnerAgo(h, 1) == D || PartnerAgo(h, 2) == D ? D : C;
    case StrategyId::kTwoTitsForTwoTats: {
      bool recent = PartnerAgo(h, 1) == D && PartnerAgo(h, 2) == D;
      bool older = PartnerAgo(h, 2) == D && PartnerAgo(h, 3) == D;
      return recent || older ? D : C;
    }
    case StrategyId::kT2: return T2(h);
    case StrategyId::kGrim: return LenientGrim(h, 1);
    case StrategyId::kLenientGrim2: return LenientGrim(h, 2);
    case StrategyId::kLenientGrim3: return LenientGrim(h, 3);
    case StrategyId::kWSLS: return WinStayLoseShift(h);
    case StrategyId::kPerfectTFT2: return PerfectTFT2(h);
    case StrategyId::kAlwaysDefect: return D;
    case StrategyId::kFalseCooperator: return first ? C : D;
    case StrategyId::kExplTFT: return first ? D : TitForNTats(h, 1);
    case StrategyId::kExplTF2T: return first ? D : TitForNTats(h, 2);
    case StrategyId::kExplTF3T: return first ? D : TitForNTats(h, 3);
    case StrategyId::kExplGrim2: return first ? D : LenientGrim(h, 2);
    case StrategyId::kExplGrim3: return first ? D : LenientGrim(h, 3);
    case StrategyId::kAlternator: return h.size() % 2 == 0 ? D : C;
    // Win-stay lose-shift opening with C.
    case StrategyId::kPavlov: return WinStayLoseShift(h);
  }
  throw std::logic_error("unhandled strategy");
}

ActionId StrategyNextAction(StrategyId id, const std::vector<JointAction>& history,
                            Role role) {
  History h;
  h.reserve(history.size());
  for (const JointAction& j : history) h.emplace_back(j.Of(role), j.Of(Other(role)));
  return {role, StrategyMove(id, h)};
}

ActionId BaselinePredict(StrategyId id, const std::vector<JointAction>& history,
                         Role modeled) {
  return StrategyNextAction(id, history, modeled);
}

}  // namespace oppmodel

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

#include "oppmodel/experts.h"

#include <cmath>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

namespace oppmodel {
namespace {

using K = GameEvent::Kind;

JointAction J(const char* label) { return ParseJointAction(label); }

const ExpertFsm& Named(const std::vector<ExpertFsm>& roster, const std::string& name) {
  for (const ExpertFsm& e : roster) {
    if (e.name() == name) return e;
  }
  FAIL("no expert named " << name);
  return roster.front();
}

// Every event an expert can receive: the plain kinds plus a proposal of
// every symbol in the speech alphabet.
std::vector<GameEvent> EventAlphabet() {
  std::vector<GameEvent> events = {
      GameEvent::Of(K::kRoundStart), GameEvent::Of(K::kPartnerComplied),
      GameEvent::Of(K::kPartnerDeviated), GameEvent::Of(K::kPunishmentSatisfied),
      GameEvent::Of(K::kSelfDeviated)};
  for (int z = 0; z < kNumSpeechSymbols; ++z) {
    SpeechAct s = SpeechFromSymbol(z);
    if (s.is_proposal()) events.push_back(GameEvent::Proposed(s));
  }
  return events;
}

std::set<int> Reachable(const ExpertFsm& e, const std::vector<GameEvent>& events) {
  std::set<int> seen = {e.start()};
  std::queue<int> frontier;
  frontier.push(e.start());
  while (!frontier.empty()) {
    int s = frontier.front();
    frontier.pop();
    for (const GameEvent& ev : events) {
      int next = FsmStep(e, s, ev);
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return seen;
}

TEST_CASE("roster composition and typing") {
  for (Role role : {Role::kRow, Role::kColumn}) {
    const auto roster = BuildExpertRoster(PrisonersDilemma(), role);
    CHECK(roster.size() >= 6);
    int leaders = 0;
    int followers = 0;
    for (const ExpertFsm& e : roster) {
      CHECK(e.role() == role);
      CHECK(e.potential() >= 0.0);
      CHECK(ExpertIntentType(e) == IntentType::kMaximizePayoff);
      (ExpertPlanType(e) == PlanType::kLeader ? leaders : followers)++;
    }
    CHECK(leaders > 0);
    CHECK(followers > 0);
    CHECK(ExpertPlanType(Named(roster, "leader-pure-CC")) == PlanType::kLeader);
    CHECK(ExpertPlanType(Named(roster, "leader-alternating-AC-BC")) == PlanType::kLeader);
    CHECK(ExpertPlanType(Named(roster, "best-response")) == PlanType::kFollower);
    CHECK(ExpertPlanType(Named(roster, "maximin")) == PlanType::kFollower);
    CHECK(ExpertIntentType(Named(roster, "maximin")) == IntentType::kMaximizePayoff);
    CHECK(ExpertIntentType(Named(roster, "follower-pure-CC")) == IntentType::kMaximizePayoff);
  }
}

TEST_CASE("fairness intent is carried by construction") {
  ExpertFsm e = MakeLeader("fair", PrisonersDilemma(), Role::kRow, {J("AC")},
                           IntentType::kMaximizeFairness);
  CHECK(ExpertIntentType(e) == IntentType::kMaximizeFairness);
}

TEST_CASE("leader transitions") {
  const auto roster = BuildExpertRoster(PrisonersDilemma());
  const ExpertFsm& e = Named(roster, "leader-pure-CC");
  const int offer = e.FindState("Offer");
  const int coop = e.FindState("Cooperate");
  const int punish = e.FindState("Punish");
  REQUIRE(offer >= 0);
  REQUIRE(coop >= 0);
  REQUIRE(punish >= 0);
  CHECK(e.start() == offer);
  CHECK(FsmStep(e, offer, GameEvent::Of(K::kPartnerComplied)) == coop);
  CHECK(FsmStep(e, coop, GameEvent::Of(K::kPartnerDeviated)) == punish);
  CHECK(FsmStep(e, punish, GameEvent::Of(K::kPunishmentSatisfied)) == offer);
  CHECK(FsmStep(e, punish, GameEvent::Of(K::kRoundStart)) == punish);
}

TEST_CASE("every leader reaches Punish through PartnerDeviated") {
  for (const ExpertFsm& e : BuildExpertRoster(PrisonersDilemma())) {
    if (e.archetype() != ExpertFsm::Archetype::kLeader) continue;
    const int punish = e.FindState("Punish");
    REQUIRE(punish >= 0);
    // Breadth-first search that must end with a PartnerDeviated edge.
    bool found = false;
    for (int s : Reachable(e, EventAlphabet())) {
      if (FsmStep(e, s, GameEvent::Of(K::kPartnerDeviated)) == punish) found = true;
    }
    CHECK_MESSAGE(found, e.name());
  }
}

TEST_CASE("every state is reachable from its start state") {
  const auto events = EventAlphabet();
  for (Role role : {Role::kRow, Role::kColumn}) {
    for (const ExpertFsm& e : BuildExpertRoster(PrisonersDilemma(), role)) {
      CHECK_MESSAGE(Reachable(e, events).size() ==
                        static_cast<std::size_t>(e.num_states()),
                    e.name());
    }
  }
}

TEST_CASE("transitions are total and emissions are distributions") {
  const auto events = EventAlphabet();
  for (const ExpertFsm& e : BuildExpertRoster(PrisonersDilemma())) {
    for (int s = 0; s < e.num_states(); ++s) {
      for (const GameEvent& ev : events) {
        int next = FsmStep(e, s, ev);
        CHECK(next >= 0);
        CHECK(next < e.num_states());
      }
      const FsmState& st = e.state(s);
      double speech = 0.0;
      for (const SpeechEmission& em : st.speech) speech += em.prob;
      CHECK(std::abs(speech - 1.0) <= 1e-9);
      CHECK(std::abs(st.action[0] + st.action[1] - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("punish states defect") {
  for (const ExpertFsm& e : BuildExpertRoster(PrisonersDilemma())) {
    for (const FsmState& st : e.states()) {
      if (st.kind == StateKind::kPunish) {
        CHECK(st.ActionProb(Move::kDefect) >= 1.0 - 0.02);
      }
    }
  }
}

TEST_CASE("action events against the plan") {
  const auto roster = BuildExpertRoster(PrisonersDilemma());
  const ExpertFsm& e = Named(roster, "leader-pure-CC");
  const int offer = e.FindState("Offer");
  CHECK(ActionEvent(e, offer, J("AC"), false).kind == K::kPartnerComplied);
  CHECK(ActionEvent(e, offer, J("AD"), false).kind == K::kPartnerDeviated);
  CHECK(ActionEvent(e, offer, J("BC"), false).kind == K::kSelfDeviated);
  const int punish = e.FindState("Punish");
  CHECK(ActionEvent(e, punish, J("BD"), true).kind == K::kPunishmentSatisfied);
}

TEST_CASE("potentials are compliant per-round payoffs") {
  const auto roster = BuildExpertRoster(PrisonersDilemma());
  CHECK(Named(roster, "leader-pure-CC").potential() == doctest::Approx(60));
  CHECK(Named(roster, "leader-alternating-AC-BC").potential() == doctest::Approx(80));
  CHECK(Named(roster, "leader-alternating-AC-AD").potential() == doctest::Approx(30));
  CHECK(Named(roster, "maximin").potential() == doctest::Approx(20));
  CHECK(PartnerPlanValue(Named(roster, "leader-alternating-AC-BC"), PrisonersDilemma()) ==
        doctest::Approx(30));
}

TEST_CASE("follower accepts congruent proposals only") {
  const auto roster = BuildExpertRoster(PrisonersDilemma());
  const ExpertFsm& f = Named(roster, "follower-alternating-AC-BC");
  const int start = f.start();
  int accepted = FsmStep(f, start, GameEvent::Proposed(SpeechAct::Propose({J("BC"), J("AC")})));
  CHECK(f.state(accepted).kind == StateKind::kAccept);
  CHECK(f.plan()[f.state(accepted).step] == J("BC"));
  CHECK(FsmStep(f, start, GameEvent::Proposed(SpeechAct::Propose({J("AC")}))) == start);
  CHECK(FsmStep(f, accepted, GameEvent::Proposed(SpeechAct::Propose({J("BD")}))) == start);
}

TEST_CASE("dump names every state") {
  for (const ExpertFsm& e : BuildExpertRoster(PrisonersDilemma())) {
    const std::string dump = e.Dump();
    for (const FsmState& st : e.states()) CHECK(dump.find(st.name) != std::string::npos);
  }
}

}  // namespace
}  // namespace oppmodel

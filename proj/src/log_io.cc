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

#include "oppmodel/log_io.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace oppmodel {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<const char*, 4> kJointLabels = {"AC", "AD", "BC", "BD"};

Json SpeechToJson(const SpeechAct& s) {
  Json cycle = Json::array();
  for (const JointAction& j : s.cycle()) cycle.push_back(j.Label());
  Json out;
  out["kind"] = SpeechKindName(s.kind());
  out["cycle"] = std::move(cycle);
  return out;
}

SpeechAct SpeechFromJson(const Json& j) {
  SpeechKind kind = ParseSpeechKind(j.at("kind").get<std::string>());
  PlanCycle cycle;
  for (const Json& c : j.at("cycle")) {
    cycle.push_back(ParseJointAction(c.get<std::string>()));
  }
  if (kind == SpeechKind::kPropose) return SpeechAct::Propose(std::move(cycle));
  if (!cycle.empty()) throw std::invalid_argument("only proposals carry a cycle");
  return SpeechAct::Of(kind);
}

Json HeaderToJson(const InteractionLog& log) {
  Json payoff;
  for (int i = 0; i < 4; ++i) {
    const PayoffPair& p = log.game.payoffs()[i];
    payoff[kJointLabels[i]] = Json::array({p.row, p.col});
  }
  Json out;
  out["game_id"] = log.game_id;
  out["game"] = log.game.name();
  out["payoff"] = std::move(payoff);
  return out;
}

Json RoundToJson(const std::string& game_id, const RoundRecord& r) {
  Json out;
  out["game_id"] = game_id;
  out["round"] = r.round;
  out["z_row"] = SpeechToJson(r.z_row);
  out["z_col"] = SpeechToJson(r.z_col);
  out["a_row"] = std::string(1, r.joint.RowAction().Label());
  out["a_col"] = std::string(1, r.joint.ColAction().Label());
  out["u_row"] = r.payoff.row;
  out["u_col"] = r.payoff.col;
  return out;
}

MatrixGame GameFromJson(const Json& j) {
  std::array<PayoffPair, 4> payoffs;
  for (int i = 0; i < 4; ++i) {
    const Json& p = j.at("payoff").at(kJointLabels[i]);
    payoffs[i] = {p.at(0).get<Points>(), p.at(1).get<Points>()};
  }
  return MatrixGame(j.at("game").get<std::string>(), payoffs);
}

Move MoveFromLabel(const Json& j, Role role) {
  std::string label = j.get<std::string>();
  if (label.size() != 1) throw std::invalid_argument("action must be one letter");
  ActionId a = ParseAction(label[0]);
  if (a.role != role) {
    throw std::invalid_argument("action " + label + " does not belong to the " +
                                RoleName(role) + " player");
  }
  return a.move;
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool ContainsAny(const std::string& haystack,
                 std::initializer_list<const char*> needles) {
  for (const char* n : needles) {
    if (haystack.find(n) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

LogFormatError::LogFormatError(int line, int round, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (round >= 0 ? " (round " + std::to_string(round) + ")"
                                     : std::string()) +
                         ": " + message),
      line_(line),
      round_(round) {}

void InteractionLog::Append(const SpeechAct& z_row, const SpeechAct& z_col,
                            JointAction joint) {
  rounds.push_back({static_cast<int>(rounds.size()), z_row, z_col, joint,
                    game.Payoff(joint)});
}

std::vector<JointAction> InteractionLog::JointHistory() const {
  std::vector<JointAction> out;
  out.reserve(rounds.size());
  for (const RoundRecord& r : rounds) out.push_back(r.joint);
  return out;
}

std::string WriteLog(const InteractionLog& log) {
  std::string out = HeaderToJson(log).dump() + "\n";
  for (const RoundRecord& r : log.rounds) {
    out += RoundToJson(log.game_id, r).dump() + "\n";
  }
  return out;
}

std::string WriteCorpus(const std::vector<InteractionLog>& corpus) {
  std::string out;
  for (const InteractionLog& log : corpus) out += WriteLog(log);
  return out;
}

std::vector<InteractionLog> ReadCorpus(const std::string& text) {
  std::vector<InteractionLog> corpus;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw LogFormatError(line_no, -1, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw LogFormatError(line_no, -1, "expected a JSON object");

    if (j.contains("payoff")) {
      InteractionLog log;
      try {
        log.game_id = j.at("game_id").get<std::string>();
        log.game = GameFromJson(j);
      } catch (const std::exception& e) {
        throw LogFormatError(line_no, -1, std::string("bad header: ") + e.what());
      }
      corpus.push_back(std::move(log));
      continue;
    }

    if (corpus.empty()) throw LogFormatError(line_no, -1, "round before header");
    InteractionLog& log = corpus.back();
    RoundRecord r;
    try {
      if (j.at("game_id").get<std::string>() != log.game_id) {
        throw std::invalid_argument("game_id does not match header '" +
                                    log.game_id + "'");
      }
      r.round = j.at("round").get<int>();
      r.z_row = SpeechFromJson(j.at("z_row"));
      r.z_col = SpeechFromJson(j.at("z_col"));
      r.joint = {MoveFromLabel(j.at("a_row"), Role::kRow),
                 MoveFromLabel(j.at("a_col"), Role::kColumn)};
      r.payoff = {j.at("u_row").get<Points>(), j.at("u_col").get<Points>()};
    } catch (const LogFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw LogFormatError(line_no, -1, std::string("bad round: ") + e.what());
    }
    if (r.round != static_cast<int>(log.rounds.size())) {
      throw LogFormatError(line_no, r.round,
                           "round index out of sequence (expected " +
                               std::to_string(log.rounds.size()) + ")");
    }
    PayoffPair expected = log.game.Payoff(r.joint);
    if (r.payoff != expected) {
      throw LogFormatError(
          line_no, r.round,
          "payoff mismatch for " + r.joint.Label() + ": got (" +
              std::to_string(r.payoff.row) + ", " + std::to_string(r.payoff.col) +
              "), game says (" + std::to_string(expected.row) + ", " +
              std::to_string(expected.col) + ")");
    }
    log.rounds.push_back(std::move(r));
  }
  return corpus;
}

InteractionLog ReadLog(const std::string& text) {
  std::vector<InteractionLog> corpus = ReadCorpus(text);
  if (corpus.size() != 1) {
    throw LogFormatError(0, -1, "expected exactly one game, found " +
                                    std::to_string(corpus.size()));
  }
  return std::move(corpus.front());
}

std::vector<InteractionLog> ReadCorpusFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ReadCorpus(buffer.str());
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<SpeechAct> ParseUtterance(const std::string& text) {
  static const std::regex kAlternate(
      R"(alternate between\s+([AB][CD])\s+and\s+([AB][CD]))",
      std::regex::icase);
  static const std::regex kPlay(R"(\bplay\s+([AB][CD])\b)", std::regex::icase);

  std::vector<SpeechAct> acts;
  std::string sentence;
  auto flush = [&]() {
    std::string lower = Lower(sentence);
    std::smatch m;
    if (std::regex_search(sentence, m, kAlternate)) {
      JointAction a = ParseJointAction(Upper(m[1].str()));
      JointAction b = ParseJointAction(Upper(m[2].str()));
      acts.push_back(SpeechAct::Propose({a, b}));
    } else if (std::regex_search(sentence, m, kPlay)) {
      JointAction j = ParseJointAction(Upper(m[1].str()));
      // "This round, let's play XY" pins the phase of a pending alternation.
      auto pending = std::find_if(acts.rbegin(), acts.rend(), [&](const SpeechAct& s) {
        return s.is_proposal() && s.cycle().size() == 2;
      });
      if (lower.find("this round") != std::string::npos && pending != acts.rend() &&
          (pending->cycle()[0] == j || pending->cycle()[1] == j)) {
        if (pending->cycle()[0] != j) *pending = SpeechAct::Propose(Rotate(pending->cycle(), 1));
      } else {
        acts.push_back(SpeechAct::Propose({j}));
      }
    }
    if (ContainsAny(lower, {"punish", "or else", "you will regret"})) {
      acts.push_back(SpeechAct::Of(SpeechKind::kThreat));
    }
    if (ContainsAny(lower, {"forgive"})) {
      acts.push_back(SpeechAct::Of(SpeechKind::kForgive));
    }
    if (ContainsAny(lower, {"betray", "cheat", "liar", "you lied"})) {
      acts.push_back(SpeechAct::Of(SpeechKind::kAccuse));
    }
    if (ContainsAny(lower, {"curse", "in your face", "idiot", "stupid", "loser"})) {
      acts.push_back(SpeechAct::Of(SpeechKind::kInsult));
    }
    if (ContainsAny(lower, {"excellent", "great", "good job", "thank", "nice",
                            "sweet", "well done"})) {
      acts.push_back(SpeechAct::Of(SpeechKind::kPraise));
    }
    sentence.clear();
  };
  for (char c : text) {
    sentence += c;
    if (c == '.' || c == '!' || c == '?') flush();
  }
  flush();
  return acts;
}

SpeechAct ParseSpeech(const std::string& text) {
  std::vector<SpeechAct> acts = ParseUtterance(text);
  for (const SpeechAct& s : acts) {
    if (s.is_proposal()) return s;
  }
  for (const SpeechAct& s : acts) {
    if (s.kind() == SpeechKind::kThreat) return s;
  }
  return acts.empty() ? SpeechAct::Silence() : acts.front();
}

}  // namespace oppmodel

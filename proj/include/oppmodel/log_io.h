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

#ifndef OPPMODEL_LOG_IO_H_
#define OPPMODEL_LOG_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "oppmodel/interaction_log.h"
#include "oppmodel/speech.h"

namespace oppmodel {

// Malformed or inconsistent .ijl input. `line` is 1-based; `round` is -1 when
// the problem is not tied to a round.
class LogFormatError : public std::runtime_error {
 public:
  LogFormatError(int line, int round, const std::string& message);
  int line() const { return line_; }
  int round() const { return round_; }

 private:
  int line_;
  int round_;
};

// .ijl: JSON Lines, one header line per game followed by one line per round.
//   {"game_id":..,"game":..,"payoff":{"AC":[r,c],"AD":..,"BC":..,"BD":..}}
//   {"game_id":..,"round":..,"z_row":{"kind":..,"cycle":[..]},"z_col":..,
//    "a_row":..,"a_col":..,"u_row":..,"u_col":..}
std::string WriteLog(const InteractionLog& log);
std::string WriteCorpus(const std::vector<InteractionLog>& corpus);

// Parses exactly one game.
InteractionLog ReadLog(const std::string& text);
std::vector<InteractionLog> ReadCorpus(const std::string& text);

std::vector<InteractionLog> ReadCorpusFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

// Splits a free-text chat message into speech acts, in order of appearance.
// "alternate between XY and X'Y'" and "play XY" become proposals; a later
// "this round, let's play XY" rotates a pending alternation.
std::vector<SpeechAct> ParseUtterance(const std::string& text);

// The act the model consumes: the first proposal, else the first threat,
// else the first recognized act, else Silence.
SpeechAct ParseSpeech(const std::string& text);

}  // namespace oppmodel

#endif  // OPPMODEL_LOG_IO_H_

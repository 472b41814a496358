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

#ifndef OPPMODEL_TESTS_ORACLES_H_
#define OPPMODEL_TESTS_ORACLES_H_

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "oppmodel/belief.h"
#include "oppmodel/speech.h"

namespace oppmodel::testing {

inline double Unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Row-stochastic table with strictly positive entries, or with some zeros
// when `sparse` is set (every row keeps at least one positive entry).
inline Eigen::MatrixXd RandomStochastic(int rows, int cols, std::mt19937_64& rng,
                                        bool sparse = false) {
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (int c = 0; c < cols; ++c) {
      double v = 0.05 + Unit(rng);
      if (sparse && Unit(rng) < 0.4) v = 0.0;
      m(r, c) = v;
      sum += v;
    }
    if (sum == 0.0) {
      m(r, static_cast<int>(rng() % cols)) = 1.0;
      sum = 1.0;
    }
    m.row(r) /= sum;
  }
  return m;
}

inline ConditionalModels RandomModels(int n, std::mt19937_64& rng, bool sparse = false) {
  ConditionalModels m = ConditionalModels::Zeros(n, Role::kRow);
  m.speech_emission = RandomStochastic(n, kNumSpeechSymbols, rng, sparse);
  m.action_emission = RandomStochastic(n, 2, rng, sparse);
  for (auto& k : m.update) k = RandomStochastic(n, n, rng, sparse);
  for (auto& k : m.reflection) k = RandomStochastic(n, n, rng, sparse);
  return m;
}

inline Eigen::VectorXd RandomDistribution(int n, std::mt19937_64& rng) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = 0.05 + Unit(rng);
  return v / v.sum();
}

inline SpeechAct RandomSpeech(std::mt19937_64& rng) {
  return SpeechFromSymbol(static_cast<int>(rng() % kNumSpeechSymbols));
}

inline ObservationRecord RandomObservation(std::mt19937_64& rng) {
  return {RandomSpeech(rng), RandomSpeech(rng),
          Unit(rng) < 0.5 ? Move::kCooperate : Move::kDefect,
          Unit(rng) < 0.5 ? Move::kCooperate : Move::kDefect};
}

// Posterior over the propositional state after the last observation, by
// enumerating every hidden path s_0, h_0, s_1, h_1, ..., s_T. Each round t
// contributes p(z_t | s_t) (when speech is used), the reflection
// p(h_t | s_t, z), the action likelihood p(a_t | h_t) and the update
// p(s_{t+1} | h_t, a). The last state carries no speech weight.
inline Eigen::VectorXd BruteForcePosterior(const Eigen::VectorXd& prior,
                                           const ConditionalModels& m,
                                           const std::vector<ObservationRecord>& obs,
                                           bool use_speech) {
  const int n = static_cast<int>(prior.size());
  const int rounds = static_cast<int>(obs.size());
  const int len = 2 * rounds + 1;
  std::vector<int> path(len, 0);
  Eigen::VectorXd post = Eigen::VectorXd::Zero(n);
  while (true) {
    double w = prior(path[0]);
    for (int t = 0; t < rounds && w != 0.0; ++t) {
      const int s = path[2 * t];
      const int h = path[2 * t + 1];
      const int s_next = path[2 * t + 2];
      const ObservationRecord& o = obs[t];
      if (use_speech) w *= m.speech_emission(s, SpeechSymbol(o.modeled_speech));
      const int zp = use_speech ? SpeechSymbol(o.partner_speech) : SpeechSymbol(SpeechAct());
      const int zm = use_speech ? SpeechSymbol(o.modeled_speech) : SpeechSymbol(SpeechAct());
      w *= m.reflection[zp * kNumSpeechSymbols + zm](s, h);
      w *= m.action_emission(h, static_cast<int>(o.modeled_move));
      w *= m.update[2 * static_cast<int>(o.modeled_move) + static_cast<int>(o.partner_move)](h, s_next);
    }
    post(path[len - 1]) += w;
    int k = 0;
    while (k < len && ++path[k] == n) path[k++] = 0;
    if (k == len) break;
  }
  return post / post.sum();
}

// Two-tailed Student-t p-value by composite Simpson integration of the
// density over [0, |t|].
inline double TTailOracle(double t, int df, int intervals = 20000) {
  const double nu = df;
  const double log_c = std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2) -
                       0.5 * std::log(nu * M_PI);
  auto f = [&](double x) { return std::exp(log_c - (nu + 1) / 2 * std::log1p(x * x / nu)); };
  const double b = std::fabs(t);
  if (b == 0.0) return 1.0;
  const double h = b / intervals;
  double s = f(0) + f(b);
  for (int i = 1; i < intervals; ++i) s += f(i * h) * (i % 2 ? 4 : 2);
  return 1.0 - 2.0 * s * h / 3.0;
}

}  // namespace oppmodel::testing

#endif  // OPPMODEL_TESTS_ORACLES_H_

// mstre/ngram.h

// Copyright 2026  The mstrenet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSTRE_NGRAM_H_
#define MSTRE_NGRAM_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mstre/matrix.h"

namespace mstre {

inline const char* kSentenceStart = "<s>";
inline const char* kSentenceEnd = "</s>";
inline const char* kUnknownWord = "<unk>";

/// Add-k smoothed n-gram language model. Conditional probabilities are
/// precomputed at training time; for every seen history they sum to 1 over
/// the predictable symbols (vocabulary + <unk> + </s>) and every unseen
/// symbol shares the <unk> probability. Unseen histories are uniform.
class NgramModel {
 public:
  using History = std::vector<std::string>;

  NgramModel() = default;

  int order() const { return order_; }
  Real smoothing_k() const { return k_; }
  const std::set<std::string>& vocabulary() const { return vocab_; }

  /// P(token | history); token and history words outside the vocabulary are
  /// mapped to <unk>. `history` uses the most recent order-1 tokens.
  Real probability(const History& history, const std::string& token) const;

  Real log_probability(const History& history, const std::string& token) const;

  /// Number of predictable symbols (vocabulary + <unk> + </s>).
  int predictable_count() const { return static_cast<int>(vocab_.size()) + 2; }

  History start_history() const;
  History shifted(const History& history, const std::string& token) const;

  void save(const std::string& path) const;
  static NgramModel load(const std::string& path);

  friend NgramModel train_ngram(const std::vector<std::vector<std::string>>&,
                                int, Real);

 private:
  std::string map_token(const std::string& token) const;

  int order_ = 2;
  Real k_ = 0.1;
  std::set<std::string> vocab_;
  // Seen history -> (seen successor -> probability, plus <unk> entry that
  // every unseen successor shares).
  std::map<History, std::map<std::string, Real>> table_;
};

/// Trains an add-k model of the given order on tokenized sentences.
/// Sentences are wrapped in <s>/<\s> internally; pass k > 0 for smoothing.
NgramModel train_ngram(const std::vector<std::vector<std::string>>& corpus,
                       int order, Real k);

/// Sum of log conditional probabilities of `tokens` including the
/// end-of-sentence transition. Finite for any input.
Real lm_logprob(const NgramModel& model, const std::vector<std::string>& tokens);

}  // namespace mstre

#endif  // MSTRE_NGRAM_H_

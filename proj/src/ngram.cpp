// src/ngram.cpp

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

#include "mstre/ngram.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mstre/errors.h"

namespace mstre {

std::string NgramModel::map_token(const std::string& token) const {
  if (token == kSentenceEnd) return token;
  return vocab_.count(token) ? token : kUnknownWord;
}

Real NgramModel::probability(const History& history, const std::string& token) const {
  History h;
  const size_t ctx = static_cast<size_t>(order_ - 1);
  // Keep the most recent order-1 tokens, map OOV context words to <unk>.
  const size_t start = history.size() > ctx ? history.size() - ctx : 0;
  for (size_t i = start; i < history.size(); ++i) {
    const std::string& w = history[i];
    h.push_back(w == kSentenceStart ? w : map_token(w));
  }
  while (h.size() < ctx) h.insert(h.begin(), kSentenceStart);

  const auto it = table_.find(h);
  if (it == table_.end()) return 1.0 / predictable_count();
  const std::map<std::string, Real>& row = it->second;
  const auto tok_it = row.find(map_token(token));
  if (tok_it != row.end()) return tok_it->second;
  return row.at(kUnknownWord);  // every unseen successor shares this mass
}

Real NgramModel::log_probability(const History& history,
                                 const std::string& token) const {
  return std::log(probability(history, token));
}

NgramModel::History NgramModel::start_history() const {
  return History(static_cast<size_t>(order_ - 1), kSentenceStart);
}

NgramModel::History NgramModel::shifted(const History& history,
                                        const std::string& token) const {
  History h = history;
  h.push_back(map_token(token));
  while (h.size() > static_cast<size_t>(order_ - 1)) h.erase(h.begin());
  return h;
}

NgramModel train_ngram(const std::vector<std::vector<std::string>>& corpus,
                       int order, Real k) {
  if (corpus.empty()) throw DataError("train_ngram: empty corpus");
  if (order < 1) throw ConfigError("train_ngram: order must be >= 1");
  if (!(k > 0.0)) throw ConfigError("train_ngram: k must be > 0");

  NgramModel model;
  model.order_ = order;
  model.k_ = k;
  for (const std::vector<std::string>& sent : corpus)
    for (const std::string& w : sent) model.vocab_.insert(w);

  // Raw counts of (history, successor) events.
  std::map<NgramModel::History, std::map<std::string, long>> counts;
  const size_t ctx = static_cast<size_t>(order - 1);
  for (const std::vector<std::string>& sent : corpus) {
    std::vector<std::string> padded(ctx, kSentenceStart);
    padded.insert(padded.end(), sent.begin(), sent.end());
    padded.push_back(kSentenceEnd);
    for (size_t i = ctx; i < padded.size(); ++i) {
      NgramModel::History h(padded.begin() + (i - ctx), padded.begin() + i);
      counts[h][padded[i]] += 1;
    }
  }

  const int predictable = model.predictable_count();
  for (const auto& [history, successors] : counts) {
    long total = 0;
    for (const auto& [token, count] : successors) total += count;
    const Real denom = static_cast<Real>(total) + k * predictable;
    std::map<std::string, Real>& row = model.table_[history];
    for (const auto& [token, count] : successors)
      row[token] = (static_cast<Real>(count) + k) / denom;
    if (!row.count(kUnknownWord)) row[kUnknownWord] = k / denom;
    if (!row.count(kSentenceEnd)) row[kSentenceEnd] = k / denom;
  }
  return model;
}

Real lm_logprob(const NgramModel& model, const std::vector<std::string>& tokens) {
  NgramModel::History h = model.start_history();
  Real total = 0.0;
  for (const std::string& tok : tokens) {
    total += model.log_probability(h, tok);
    h = model.shifted(h, tok);
  }
  total += model.log_probability(h, kSentenceEnd);
  return total;
}

void NgramModel::save(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw DataError("cannot write lm file: " + path);
  os << "NGLM1\n";
  os << "order\t" << order_ << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", k_);
  os << "k\t" << buf << "\n";
  os << "vocab";
  for (const std::string& w : vocab_) os << "\t" << w;
  os << "\n";
  os << "ngrams\t" << "\n";
  // One record per stored n-gram: log10 probability, then the history and
  // successor tokens. Histories are grouped in sorted (ARPA-like) order.
  for (const auto& [history, row] : table_) {
    for (const auto& [token, prob] : row) {
      std::snprintf(buf, sizeof(buf), "%.17g", std::log10(prob));
      os << buf;
      for (const std::string& w : history) os << "\t" << w;
      os << "\t" << token << "\n";
    }
  }
}

NgramModel NgramModel::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open lm file: " + path);
  std::string line;
  if (!std::getline(is, line) || line != "NGLM1")
    throw DataError("bad lm file magic: " + path);
  NgramModel model;
  bool in_ngrams = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, '\t');
    if (!in_ngrams) {
      if (field == "order") {
        ls >> model.order_;
      } else if (field == "k") {
        ls >> model.k_;
      } else if (field == "vocab") {
        std::string w;
        while (std::getline(ls, w, '\t'))
          if (!w.empty()) model.vocab_.insert(w);
      } else if (field == "ngrams") {
        in_ngrams = true;
      } else {
        throw DataError("unknown lm header field: " + field);
      }
      continue;
    }
    std::vector<std::string> tokens;
    std::string tok;
    while (std::getline(ls, tok, '\t')) tokens.push_back(tok);
    if (tokens.size() != static_cast<size_t>(model.order_))
      throw DataError("bad lm record arity in " + path);
    const Real prob = std::pow(10.0, std::stod(field));
    History h(tokens.begin(), tokens.end() - 1);
    model.table_[h][tokens.back()] = prob;
  }
  if (model.order_ < 1) throw DataError("lm file missing order: " + path);
  return model;
}

}  // namespace mstre

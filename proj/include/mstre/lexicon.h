// mstre/lexicon.h

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

#ifndef MSTRE_LEXICON_H_
#define MSTRE_LEXICON_H_

#include <map>
#include <string>
#include <vector>

namespace mstre {

/// One phoneme of a pronunciation. Symbols keep CMU stress digits ("AH0");
/// the acoustic state mapping strips them (see PhoneSet).
struct Phoneme {
  std::string symbol;
  bool is_vowel = false;
  bool is_silence_class = false;

  bool operator==(const Phoneme& o) const { return symbol == o.symbol; }
};

using Pronunciation = std::vector<Phoneme>;

Phoneme make_phoneme(const std::string& symbol);
std::string pron_to_string(const Pronunciation& pron);

/// Word -> pronunciations map with the <silence>/<music> pseudo-words always
/// present (pronounced SIL and MUS). Pronunciation lists are ordered and
/// duplicate-free (set semantics on insert).
class Lexicon {
 public:
  Lexicon();

  /// Adds a pronunciation; returns false if it was already present.
  bool add(const std::string& word, const Pronunciation& pron);

  bool contains(const std::string& word) const;
  const std::vector<Pronunciation>& pronunciations(const std::string& word) const;

  /// Words in sorted order (includes pseudo-words).
  std::vector<std::string> words() const;

  /// Vocabulary for decoding/LM purposes: words() minus pseudo-words.
  std::vector<std::string> real_words() const;

  size_t num_words() const { return entries_.size(); }
  size_t num_pronunciations() const;

  bool operator==(const Lexicon& o) const { return entries_ == o.entries_; }

 private:
  std::map<std::string, std::vector<Pronunciation>> entries_;
};

/// Parses CMU dictionary text: "WORD  PH1 PH2 ...", "WORD(2)" alternate
/// pronunciations, ";;;" comment lines. Errors name the offending line.
Lexicon parse_lexicon(const std::string& text);

Lexicon load_lexicon(const std::string& path);

/// Canonical text form (CMU format, words sorted, variants numbered in
/// stored order). parse_lexicon(serialize_lexicon(lex)) == lex and
/// serialize is a fixed point of parse+serialize.
std::string serialize_lexicon(const Lexicon& lex);

/// Adds, for every pronunciation containing at least one vowel, one extra
/// variant with every vowel phoneme doubled in place. Originals are kept;
/// pseudo-words are untouched.
Lexicon expand_vowel_variants(const Lexicon& lex);

/// Deterministic letter-cluster G2P for out-of-vocabulary words. The word
/// must match [A-Z']+ and be absent from the lexicon.
Pronunciation g2p_fallback(const std::string& word, const Lexicon& lex);

}  // namespace mstre

#endif  // MSTRE_LEXICON_H_

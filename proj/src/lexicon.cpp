// src/lexicon.cpp

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

#include "mstre/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mstre/errors.h"
#include "mstre/phones.h"
#include "mstre/text_norm.h"

namespace mstre {

Phoneme make_phoneme(const std::string& symbol) {
  if (symbol.empty()) throw DataError("empty phoneme symbol");
  Phoneme p;
  p.symbol = symbol;
  p.is_silence_class = (symbol == "SIL" || symbol == "MUS");
  // Vowels are the symbols carrying a CMU stress digit (AH0, IY1, ...).
  p.is_vowel = std::isdigit(static_cast<unsigned char>(symbol.back())) &&
               PhoneSet::is_vowel_symbol(symbol);
  return p;
}

std::string pron_to_string(const Pronunciation& pron) {
  std::string s;
  for (size_t i = 0; i < pron.size(); ++i) {
    if (i) s.push_back(' ');
    s += pron[i].symbol;
  }
  return s;
}

Lexicon::Lexicon() {
  entries_[kSilenceWord] = {{make_phoneme("SIL")}};
  entries_[kMusicWord] = {{make_phoneme("MUS")}};
}

bool Lexicon::add(const std::string& word, const Pronunciation& pron) {
  if (word.empty()) throw DataError("empty word");
  if (pron.empty()) throw DataError("empty pronunciation for word " + word);
  std::vector<Pronunciation>& prons = entries_[word];
  if (std::find(prons.begin(), prons.end(), pron) != prons.end()) return false;
  prons.push_back(pron);
  return true;
}

bool Lexicon::contains(const std::string& word) const {
  return entries_.count(word) > 0;
}

const std::vector<Pronunciation>& Lexicon::pronunciations(
    const std::string& word) const {
  const auto it = entries_.find(word);
  if (it == entries_.end()) throw DataError("word not in lexicon: " + word);
  return it->second;
}

std::vector<std::string> Lexicon::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [word, prons] : entries_) out.push_back(word);
  return out;
}

std::vector<std::string> Lexicon::real_words() const {
  std::vector<std::string> out;
  for (const auto& [word, prons] : entries_)
    if (!is_pseudo_word(word)) out.push_back(word);
  return out;
}

size_t Lexicon::num_pronunciations() const {
  size_t n = 0;
  for (const auto& [word, prons] : entries_) n += prons.size();
  return n;
}

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line.rfind(";;;", 0) == 0) continue;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word))
      continue;  // whitespace-only line
    // Strip a "(n)" variant marker.
    const size_t paren = word.find('(');
    if (paren != std::string::npos) {
      if (word.back() != ')' || paren == 0)
        throw DataError("malformed lexicon entry at line " +
                        std::to_string(line_no));
      word = word.substr(0, paren);
    }
    Pronunciation pron;
    std::string sym;
    while (ls >> sym) pron.push_back(make_phoneme(sym));
    if (pron.empty())
      throw DataError("empty pronunciation at line " + std::to_string(line_no));
    if (is_pseudo_word(word)) {
      // Pseudo-word entries in files must agree with the built-in ones.
      const Pronunciation& builtin = lex.pronunciations(word)[0];
      if (!(pron == builtin))
        throw DataError("pseudo-word redefined at line " +
                        std::to_string(line_no));
      continue;
    }
    lex.add(word, pron);
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open lexicon file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_lexicon(ss.str());
}

std::string serialize_lexicon(const Lexicon& lex) {
  std::ostringstream os;
  for (const std::string& word : lex.words()) {
    const std::vector<Pronunciation>& prons = lex.pronunciations(word);
    for (size_t i = 0; i < prons.size(); ++i) {
      os << word;
      if (i > 0) os << "(" << (i + 1) << ")";
      os << "  " << pron_to_string(prons[i]) << "\n";
    }
  }
  return os.str();
}

Lexicon expand_vowel_variants(const Lexicon& lex) {
  Lexicon out = lex;
  for (const std::string& word : lex.words()) {
    if (is_pseudo_word(word)) continue;
    for (const Pronunciation& pron : lex.pronunciations(word)) {
      bool has_vowel = false;
      Pronunciation doubled;
      doubled.reserve(pron.size() * 2);
      for (const Phoneme& ph : pron) {
        doubled.push_back(ph);
        if (ph.is_vowel) {
          doubled.push_back(ph);
          has_vowel = true;
        }
      }
      if (has_vowel) out.add(word, doubled);
    }
  }
  return out;
}

namespace {

struct G2pRule {
  const char* cluster;
  const char* phonemes;  // space separated
};

// Longest-match-first letter-cluster rules. Not a serious G2P; it exists so
// the OOV pathway is deterministic and self-contained.
const G2pRule kG2pRules[] = {
    {"TCH", "CH"}, {"SCH", "SH"},  {"GHT", "T"},
    {"CH", "CH"},  {"SH", "SH"},   {"TH", "TH"},  {"PH", "F"},
    {"WH", "W"},   {"CK", "K"},    {"NG", "NG"},  {"QU", "K W"},
    {"EE", "IY1"}, {"EA", "IY1"},  {"OO", "UW1"}, {"OU", "AW1"},
    {"OW", "OW1"}, {"OI", "OY1"},  {"OY", "OY1"}, {"AI", "EY1"},
    {"AY", "EY1"}, {"AU", "AO1"},  {"AW", "AO1"}, {"ER", "ER0"},
    {"A", "AA1"},  {"B", "B"},     {"C", "K"},    {"D", "D"},
    {"E", "EH1"},  {"F", "F"},     {"G", "G"},    {"H", "HH"},
    {"I", "IH1"},  {"J", "JH"},    {"K", "K"},    {"L", "L"},
    {"M", "M"},    {"N", "N"},     {"O", "AA1"},  {"P", "P"},
    {"R", "R"},    {"S", "S"},     {"T", "T"},    {"U", "AH1"},
    {"V", "V"},    {"W", "W"},     {"X", "K S"},  {"Y", "IY0"},
    {"Z", "Z"}};

}  // namespace

Pronunciation g2p_fallback(const std::string& word, const Lexicon& lex) {
  if (word.empty()) throw DataError("g2p_fallback: empty word");
  for (char c : word)
    if (!((c >= 'A' && c <= 'Z') || c == '\''))
      throw DataError("g2p_fallback: word must match [A-Z']: " + word);
  if (lex.contains(word)) throw DataError("not OOV: " + word);

  Pronunciation pron;
  size_t i = 0;
  while (i < word.size()) {
    if (word[i] == '\'') {
      ++i;
      continue;
    }
    bool matched = false;
    for (const G2pRule& rule : kG2pRules) {
      const size_t len = std::strlen(rule.cluster);
      if (word.compare(i, len, rule.cluster) == 0) {
        std::istringstream rs(rule.phonemes);
        std::string sym;
        while (rs >> sym) pron.push_back(make_phoneme(sym));
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;  // unreachable for [A-Z'], kept for safety
  }
  if (pron.empty()) pron.push_back(make_phoneme("AH0"));
  return pron;
}

}  // namespace mstre

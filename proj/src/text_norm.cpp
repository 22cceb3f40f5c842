// src/text_norm.cpp

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

#include "mstre/text_norm.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mstre/errors.h"

namespace mstre {

DomainTag parse_domain_tag(const std::string& s) {
  if (s == "monophonic") return DomainTag::kMonophonic;
  if (s == "polyphonic") return DomainTag::kPolyphonic;
  throw ConfigError("unknown domain tag: " + s);
}

std::string domain_tag_name(DomainTag tag) {
  return tag == DomainTag::kMonophonic ? "monophonic" : "polyphonic";
}

std::string boundary_word(DomainTag tag) {
  return tag == DomainTag::kMonophonic ? kSilenceWord : kMusicWord;
}

bool is_pseudo_word(const std::string& token) {
  return token == kSilenceWord || token == kMusicWord;
}

namespace {

const char* kOnes[] = {"ZERO", "ONE", "TWO",   "THREE", "FOUR",
                       "FIVE", "SIX", "SEVEN", "EIGHT", "NINE",
                       "TEN",  "ELEVEN", "TWELVE", "THIRTEEN", "FOURTEEN",
                       "FIFTEEN", "SIXTEEN", "SEVENTEEN", "EIGHTEEN",
                       "NINETEEN"};
const char* kTens[] = {"",      "",      "TWENTY", "THIRTY", "FORTY",
                       "FIFTY", "SIXTY", "SEVENTY", "EIGHTY", "NINETY"};

void spell_below_thousand(long v, std::ostringstream& os) {
  if (v >= 100) {
    os << kOnes[v / 100] << " HUNDRED";
    v %= 100;
    if (v) os << " ";
  }
  if (v >= 20) {
    os << kTens[v / 10];
    v %= 10;
    if (v) os << " ";
  }
  if (v > 0 || os.str().empty()) os << kOnes[v];
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

// Collapse runs of 3+ identical letters to 2 ("YEAHHHH" -> "YEAHH").
std::string collapse_letter_runs(const std::string& token) {
  std::string out;
  out.reserve(token.size());
  size_t i = 0;
  while (i < token.size()) {
    const char c = token[i];
    size_t j = i;
    while (j < token.size() && token[j] == c) ++j;
    const size_t run = j - i;
    const size_t keep =
        (std::isalpha(static_cast<unsigned char>(c)) && run >= 3) ? 2 : run;
    out.append(keep, c);
    i = j;
  }
  return out;
}

}  // namespace

std::string spell_number(long value) {
  if (value < 0 || value > 999999)
    throw DataError("spell_number: out of range 0..999999");
  std::ostringstream os;
  if (value >= 1000) {
    spell_below_thousand(value / 1000, os);
    os << " THOUSAND";
    value %= 1000;
    if (value) os << " ";
    if (!value) return os.str();
    spell_below_thousand(value, os);
    return os.str();
  }
  spell_below_thousand(value, os);
  return os.str();
}

std::vector<std::string> normalize_lyrics(const std::string& raw) {
  // Uppercase and map everything outside [A-Z0-9'-] to whitespace. Mapping
  // to space (not deletion) keeps punctuation from gluing words together.
  std::string mapped;
  mapped.reserve(raw.size());
  for (unsigned char c : raw) {
    if (std::isalpha(c))
      mapped.push_back(static_cast<char>(std::toupper(c)));
    else if (std::isdigit(c) || c == '\'' || c == '-')
      mapped.push_back(static_cast<char>(c));
    else
      mapped.push_back(' ');
  }

  std::vector<std::string> tokens = split_tokens(mapped);

  // Hyphenation: a token ending in "-" absorbs the following token (repeat
  // until stable), then interior hyphens are dropped and the parts joined.
  std::vector<std::string> merged;
  merged.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::string tok = tokens[i];
    while (!tok.empty() && tok.back() == '-' && i + 1 < tokens.size())
      tok += tokens[++i];
    std::string dehyphenated;
    for (char c : tok)
      if (c != '-') dehyphenated.push_back(c);
    if (!dehyphenated.empty()) merged.push_back(dehyphenated);
  }

  std::vector<std::string> out;
  out.reserve(merged.size());
  for (const std::string& tok : merged) {
    if (all_digits(tok)) {
      long value = -1;
      if (tok.size() <= 6) value = std::stol(tok);
      if (value >= 0 && value <= 999999) {
        for (const std::string& word : split_tokens(spell_number(value)))
          out.push_back(word);
      }
      // longer digit strings fall under "special characters": dropped
      continue;
    }
    // Mixed alphanumerics: digits are not spellable in place, strip them.
    std::string letters;
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) letters.push_back(c);
    if (letters.empty()) continue;
    out.push_back(collapse_letter_runs(letters));
  }
  return out;
}

std::vector<std::string> tag_utterance(const std::vector<std::string>& tokens,
                                       DomainTag domain) {
  for (const std::string& tok : tokens)
    if (is_pseudo_word(tok)) throw DataError("double tagging");
  std::vector<std::string> out;
  out.reserve(tokens.size() + 2);
  const std::string tag = boundary_word(domain);
  out.push_back(tag);
  out.insert(out.end(), tokens.begin(), tokens.end());
  out.push_back(tag);
  return out;
}

std::vector<std::string> strip_tags(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& tok : tokens)
    if (!is_pseudo_word(tok)) out.push_back(tok);
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace mstre

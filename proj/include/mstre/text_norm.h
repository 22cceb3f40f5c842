// mstre/text_norm.h

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

#ifndef MSTRE_TEXT_NORM_H_
#define MSTRE_TEXT_NORM_H_

#include <string>
#include <vector>

namespace mstre {

enum class DomainTag { kMonophonic, kPolyphonic };

inline const char* kSilenceWord = "<silence>";
inline const char* kMusicWord = "<music>";

DomainTag parse_domain_tag(const std::string& s);      // "monophonic"/"polyphonic"
std::string domain_tag_name(DomainTag tag);

/// The boundary pseudo-word for a domain: <silence> for monophonic,
/// <music> for polyphonic.
std::string boundary_word(DomainTag tag);

/// Lyrics normalization: uppercase; punctuation stripped except apostrophes;
/// hyphenation fixed (a token ending in "-" joins the next token, interior
/// hyphens are removed); standalone integers 0..999999 spelled out in
/// English; runs of 3+ identical letters collapsed to 2. Idempotent.
/// Empty or all-punctuation input yields an empty token list.
std::vector<std::string> normalize_lyrics(const std::string& raw);

/// English long-form spelling without "and": 401 -> "FOUR HUNDRED ONE".
/// Multi-word results are whitespace separated. Valid for 0..999999.
std::string spell_number(long value);

/// Wraps normalized tokens with the domain's boundary pseudo-word on both
/// sides. Throws DataError("double tagging") if a pseudo-word is already
/// present.
std::vector<std::string> tag_utterance(const std::vector<std::string>& tokens,
                                       DomainTag domain);

/// Removes <silence>/<music> pseudo-words (used before LM training and WER
/// scoring).
std::vector<std::string> strip_tags(const std::vector<std::string>& tokens);

bool is_pseudo_word(const std::string& token);

std::string join_tokens(const std::vector<std::string>& tokens);
std::vector<std::string> split_tokens(const std::string& line);

}  // namespace mstre

#endif  // MSTRE_TEXT_NORM_H_

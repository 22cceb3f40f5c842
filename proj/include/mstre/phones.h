// mstre/phones.h

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

#ifndef MSTRE_PHONES_H_
#define MSTRE_PHONES_H_

#include <string>
#include <vector>

namespace mstre {

// Acoustic state inventory: the 39 CMU base phones plus the two silence-class
// phones SIL (silence) and MUS (music) plus the NSN noise filler. One HMM
// state per phone, so state ids and phone ids coincide.

inline constexpr int kNumPhoneStates = 42;

/// Maps base phone symbols (stress digits stripped) to state ids and back.
class PhoneSet {
 public:
  PhoneSet();

  int num_states() const { return kNumPhoneStates; }

  /// State id for a phoneme symbol; stress digits are stripped first
  /// ("AH0" -> AH). Returns -1 for unknown symbols.
  int state_of(const std::string& phoneme_symbol) const;

  const std::string& symbol_of(int state_id) const;

  int silence_state() const { return silence_state_; }
  int music_state() const { return music_state_; }

  bool is_silence_class(int state_id) const {
    return state_id == silence_state_ || state_id == music_state_;
  }

  /// True if the base symbol (stress stripped) is one of the 15 CMU vowels.
  static bool is_vowel_symbol(const std::string& phoneme_symbol);

  /// "AH0" -> "AH"; symbols without stress digits pass through.
  static std::string strip_stress(const std::string& phoneme_symbol);

 private:
  std::vector<std::string> symbols_;
  int silence_state_ = -1;
  int music_state_ = -1;
};

const PhoneSet& global_phone_set();

}  // namespace mstre

#endif  // MSTRE_PHONES_H_

// src/phones.cpp

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

#include "mstre/phones.h"

#include <algorithm>
#include <cctype>

#include "mstre/errors.h"

namespace mstre {

namespace {

const char* kBasePhones[] = {
    "AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH", "D",  "DH",
    "EH", "ER", "EY", "F",  "G",  "HH", "IH", "IY", "JH", "K",
    "L",  "M",  "N",  "NG", "OW", "OY", "P",  "R",  "S",  "SH",
    "T",  "TH", "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH"};

const char* kVowels[] = {"AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
                         "EY", "IH", "IY", "OW", "OY", "UH", "UW"};

}  // namespace

PhoneSet::PhoneSet() {
  for (const char* p : kBasePhones) symbols_.emplace_back(p);
  silence_state_ = static_cast<int>(symbols_.size());
  symbols_.emplace_back("SIL");
  music_state_ = static_cast<int>(symbols_.size());
  symbols_.emplace_back("MUS");
  symbols_.emplace_back("NSN");  // noise filler, unused by the base lexicon
}

std::string PhoneSet::strip_stress(const std::string& phoneme_symbol) {
  std::string base = phoneme_symbol;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back())))
    base.pop_back();
  return base;
}

int PhoneSet::state_of(const std::string& phoneme_symbol) const {
  const std::string base = strip_stress(phoneme_symbol);
  const auto it = std::find(symbols_.begin(), symbols_.end(), base);
  return it == symbols_.end() ? -1
                              : static_cast<int>(it - symbols_.begin());
}

const std::string& PhoneSet::symbol_of(int state_id) const {
  if (state_id < 0 || state_id >= static_cast<int>(symbols_.size()))
    throw DataError("phone state id out of range");
  return symbols_[state_id];
}

bool PhoneSet::is_vowel_symbol(const std::string& phoneme_symbol) {
  const std::string base = strip_stress(phoneme_symbol);
  for (const char* v : kVowels)
    if (base == v) return true;
  return false;
}

const PhoneSet& global_phone_set() {
  static const PhoneSet instance;
  return instance;
}

}  // namespace mstre

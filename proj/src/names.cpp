/*
Copyright 2026 The confassign Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "confassign/names.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace confassign {
namespace {

// U+00C0..U+00FF
constexpr std::array<const char*, 64> kLatin1Fold = {
    "A", "A", "A", "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
    "D", "N", "O", "O", "O", "O", "O",  "x", "O", "U", "U", "U", "U", "Y", "TH", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o",  "/", "o", "u", "u", "u", "u", "y", "th", "y"};

// U+0100..U+017F
constexpr std::array<const char*, 128> kExtendedAFold = {
    "A", "a", "A", "a", "A", "a", "C", "c", "C", "c", "C", "c", "C", "c", "D", "d",
    "D", "d", "E", "e", "E", "e", "E", "e", "E", "e", "E", "e", "G", "g", "G", "g",
    "G", "g", "G", "g", "H", "h", "H", "h", "I", "i", "I", "i", "I", "i", "I", "i",
    "I", "i", "IJ", "ij", "J", "j", "K", "k", "k", "L", "l", "L", "l", "L", "l", "L",
    "l", "L", "l", "N", "n", "N", "n", "N", "n", "n", "N", "n", "O", "o", "O", "o",
    "O", "o", "OE", "oe", "R", "r", "R", "r", "R", "r", "S", "s", "S", "s", "S", "s",
    "S", "s", "T", "t", "T", "t", "T", "t", "U", "u", "U", "u", "U", "u", "U", "u",
    "U", "u", "U", "u", "W", "w", "Y", "y", "Y", "Z", "z", "Z", "z", "Z", "z", "s"};

// Decodes one UTF-8 sequence at `i`; returns the code point and advances.
// Invalid bytes are returned as-is.
unsigned next_code_point(std::string_view s, std::size_t& i, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  len = 1;
  if (b0 < 0x80) return b0;
  int extra = 0;
  unsigned cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    return b0;
  }
  if (i + static_cast<std::size_t>(extra) >= s.size()) return b0;
  for (int k = 1; k <= extra; ++k) {
    const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((b & 0xC0) != 0x80) return b0;
    cp = (cp << 6) | (b & 0x3F);
  }
  len = static_cast<std::size_t>(extra) + 1;
  return cp;
}

std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

}  // namespace

std::string fold_diacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = 1;
    const unsigned cp = next_code_point(text, i, len);
    if (cp >= 0xC0 && cp <= 0xFF && len > 1) {
      out += kLatin1Fold[cp - 0xC0];
    } else if (cp >= 0x100 && cp <= 0x17F) {
      out += kExtendedAFold[cp - 0x100];
    } else {
      out.append(text.substr(i, len));
    }
    i += len;
  }
  return out;
}

std::string normalize_name(std::string_view name) {
  std::string folded = fold_diacritics(name);
  for (auto& c : folded) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto comma = folded.find(',');
  if (comma != std::string::npos) {
    folded = folded.substr(comma + 1) + " " + folded.substr(0, comma);
  }
  return collapse_spaces(folded);
}

std::string NameKey::str() const {
  std::string out = surname;
  out += '|';
  if (initial != '\0') out += initial;
  return out;
}

NameKey name_key(std::string_view name) {
  std::string normalized = normalize_name(name);
  for (auto& c : normalized) {
    if (c == '.') c = ' ';
  }
  std::vector<std::string> tokens;
  std::string current;
  for (char c : normalized + " ") {
    if (c == ' ') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  while (tokens.size() > 1 &&
         std::all_of(tokens.back().begin(), tokens.back().end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    tokens.pop_back();
  }
  NameKey key;
  if (tokens.empty()) return key;
  key.surname = tokens.back();
  if (tokens.size() > 1) key.initial = tokens.front().front();
  return key;
}

bool names_match(std::string_view a, std::string_view b) { return name_key(a) == name_key(b); }

}  // namespace confassign

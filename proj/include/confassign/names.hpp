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

#pragma once

#include <string>
#include <string_view>

namespace confassign {

// Maps Latin-1 and Latin Extended-A letters in UTF-8 text to ASCII
// ("ü" -> "u", "ß" -> "ss"). Other code points pass through unchanged.
std::string fold_diacritics(std::string_view text);

/// Lowercases, folds diacritics, reorders "Surname, Given" to
/// "given surname" and collapses runs of whitespace.
std::string normalize_name(std::string_view name);

// Identity used for corpus matching: surname plus the given-name initial.
// A trailing numeric DBLP homonym suffix ("Wei Wang 0002") is ignored.
struct NameKey {
  std::string surname;
  char initial = '\0';

  std::string str() const;
  friend bool operator==(const NameKey&, const NameKey&) = default;
};

NameKey name_key(std::string_view name);

bool names_match(std::string_view a, std::string_view b);

}  // namespace confassign

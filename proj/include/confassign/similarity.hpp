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

#include "confassign/keywords.hpp"
#include "confassign/taxonomy.hpp"

namespace confassign {

/// Depth-ratio semantic similarity of two taxonomy keywords:
/// 1 for identical keywords, otherwise 2 * depth(lca) / (depth(a) + depth(b)).
double keyword_pair_similarity(const Taxonomy& t, std::string_view a, std::string_view b);

struct LevelWeights {
  double high = 1.0;
  double medium = 0.75;
  double low = 0.5;

  friend bool operator==(const LevelWeights&, const LevelWeights&) = default;
};

double level_weight(CompetenceLevel level, const LevelWeights& weights = {});

/// Mean over paper keywords of the best level-weighted pair similarity to any
/// reviewer keyword. An empty selection yields 0. Throws EmptyPaperSet for an
/// empty paper set and UnknownKeyword for ids outside `t`.
double set_similarity(const Taxonomy& t, const PaperKeywordSet& paper,
                      const ReviewerSelection& selection,
                      const LevelWeights& weights = {});

}  // namespace confassign

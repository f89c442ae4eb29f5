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

inline constexpr int kDefaultDepthThreshold = 2;

/// Adds the direct children of every reviewer-picked keyword that is rated
/// High or Medium, lies shallower than `depth_threshold`, has children, and
/// has none of those children selected. Added children inherit the level and
/// are marked inferred. Conditions are checked against the input selection
/// only, so a single call never cascades down more than one level.
ReviewerSelection expand_reviewer_selection(const Taxonomy& t,
                                            const ReviewerSelection& selection,
                                            int depth_threshold = kDefaultDepthThreshold);

/// Drops every keyword that is the direct parent of another keyword in `ks`.
/// All removals are decided against the input set, which makes the result
/// independent of iteration order and already a fixpoint.
PaperKeywordSet reduce_parent_child(const Taxonomy& t, const PaperKeywordSet& ks);

/// Keeps, for each paper keyword, the reviewer keyword(s) with maximal
/// unweighted pair similarity.
ReviewerSelection restrict_to_closest(const Taxonomy& t, const PaperKeywordSet& paper,
                                      const ReviewerSelection& selection);

}  // namespace confassign

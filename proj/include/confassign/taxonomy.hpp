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

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace confassign {

// Keyword identity is the node id attribute; labels are for display only.
using KeywordId = std::string;

/// Rooted keyword tree describing the conference coverage area.
///
/// Instances are immutable once built and may be shared freely between
/// threads. Children keep document order, which makes every downstream
/// tie-break reproducible.
class Taxonomy {
 public:
  struct Node {
    KeywordId id;
    std::string label;
    std::optional<KeywordId> parent;
    std::vector<KeywordId> children;
  };

  /// Parses the `<taxonomy><node id=".." label="..">...</node></taxonomy>`
  /// format. Throws Error with MalformedXml, DuplicateId, MultipleRoots or
  /// EmptyDocument.
  static Taxonomy from_xml(std::string_view document);

  struct NodeSpec {
    KeywordId id;
    std::string label;
    std::optional<KeywordId> parent;
  };

  /// Builds from parent links. Children order follows the order of `specs`.
  /// Validates the same tree invariants as from_xml (DuplicateId,
  /// MultipleRoots, EmptyDocument; dangling parents or cycles are
  /// MalformedDocument).
  static Taxonomy from_parents(const std::vector<NodeSpec>& specs);

  std::string to_xml() const;

  const KeywordId& root() const { return nodes_[0].id; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(std::string_view id) const;

  const Node& node(std::string_view id) const;
  const std::vector<KeywordId>& children(std::string_view id) const;
  const std::optional<KeywordId>& parent(std::string_view id) const;
  int depth(std::string_view id) const;
  int max_depth() const;
  KeywordId lca(std::string_view a, std::string_view b) const;

  // True when `parent_id` is the direct parent of `child_id`.
  bool is_parent_of(std::string_view parent_id, std::string_view child_id) const;

  /// Nodes in pre-order (document order).
  const std::vector<Node>& nodes() const { return nodes_; }

  friend bool operator==(const Taxonomy& a, const Taxonomy& b);

 private:
  Taxonomy() = default;
  std::size_t index_of(std::string_view id) const;
  void finalize();

  std::vector<Node> nodes_;
  std::vector<int> depth_;
  std::vector<int> parent_index_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace confassign

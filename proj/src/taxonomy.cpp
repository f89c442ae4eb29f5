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

#include "confassign/taxonomy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "confassign/error.hpp"
#include "xml_util.hpp"

namespace confassign {

namespace pt = boost::property_tree;

namespace {

bool is_markup_key(const std::string& key) {
  return key == "<xmlattr>" || key == "<xmlcomment>";
}

void read_node(const pt::ptree& element, const std::optional<KeywordId>& parent,
               std::vector<Taxonomy::NodeSpec>& out) {
  const auto attrs = element.get_child_optional("<xmlattr>");
  if (!attrs) throw Error(ErrorCode::kMalformedXml, "<node> without attributes");
  const auto id = attrs->get_optional<std::string>("id");
  const auto label = attrs->get_optional<std::string>("label");
  if (!id || id->empty()) {
    throw Error(ErrorCode::kMalformedXml, "<node> requires a non-empty id");
  }
  if (!label) {
    throw Error(ErrorCode::kMalformedXml, "<node id=\"" + *id + "\"> requires a label");
  }
  out.push_back({*id, *label, parent});
  for (const auto& [key, child] : element) {
    if (key == "node") {
      read_node(child, *id, out);
    } else if (!is_markup_key(key)) {
      throw Error(ErrorCode::kMalformedXml, "unexpected element <" + key + ">");
    }
  }
}

void write_node(const Taxonomy& t, const Taxonomy::Node& n, int indent,
                std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << "<node id=\"" << detail::escape_xml(n.id) << "\" label=\""
      << detail::escape_xml(n.label) << '"';
  if (n.children.empty()) {
    out << "/>\n";
    return;
  }
  out << ">\n";
  for (const auto& c : n.children) write_node(t, t.node(c), indent + 1, out);
  out << pad << "</node>\n";
}

}  // namespace

Taxonomy Taxonomy::from_xml(std::string_view document) {
  if (detail::is_blank(document)) {
    throw Error(ErrorCode::kEmptyDocument, "taxonomy document is empty");
  }
  const pt::ptree tree = detail::parse_xml(document);

  const pt::ptree* root_element = nullptr;
  for (const auto& [key, child] : tree) {
    if (key == "<xmlcomment>") continue;
    if (key != "taxonomy" || root_element != nullptr) {
      throw Error(ErrorCode::kMalformedXml,
                  "expected a single <taxonomy> document element");
    }
    root_element = &child;
  }
  if (root_element == nullptr) {
    throw Error(ErrorCode::kEmptyDocument, "no <taxonomy> element");
  }

  std::vector<NodeSpec> specs;
  int top_level = 0;
  for (const auto& [key, child] : *root_element) {
    if (key == "node") {
      if (++top_level > 1) {
        throw Error(ErrorCode::kMultipleRoots,
                    "<taxonomy> must contain exactly one top-level <node>");
      }
      read_node(child, std::nullopt, specs);
    } else if (!is_markup_key(key)) {
      throw Error(ErrorCode::kMalformedXml, "unexpected element <" + key + ">");
    }
  }
  if (top_level == 0) {
    throw Error(ErrorCode::kEmptyDocument, "<taxonomy> has no <node>");
  }
  return from_parents(specs);
}

Taxonomy Taxonomy::from_parents(const std::vector<NodeSpec>& specs) {
  if (specs.empty()) throw Error(ErrorCode::kEmptyDocument, "taxonomy has no nodes");

  std::unordered_map<std::string, std::size_t> position;
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].id.empty()) {
      throw Error(ErrorCode::kMalformedDocument, "empty keyword id");
    }
    if (!position.emplace(specs[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate keyword id '" + specs[i].id + "'");
    }
    if (!specs[i].parent) {
      if (root) {
        throw Error(ErrorCode::kMultipleRoots, "both '" + specs[*root].id + "' and '" +
                                                   specs[i].id + "' lack a parent");
      }
      root = i;
    }
  }
  if (!root) throw Error(ErrorCode::kMalformedDocument, "taxonomy has no root (cycle)");

  std::vector<std::vector<std::size_t>> kids(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!specs[i].parent) continue;
    const auto it = position.find(*specs[i].parent);
    if (it == position.end()) {
      throw Error(ErrorCode::kMalformedDocument, "'" + specs[i].id +
                                                     "' refers to unknown parent '" +
                                                     *specs[i].parent + "'");
    }
    kids[it->second].push_back(i);
  }

  // Pre-order walk from the root; anything not reached sits on a cycle.
  Taxonomy t;
  t.nodes_.reserve(specs.size());
  std::vector<std::size_t> stack{*root};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    Node n{specs[i].id, specs[i].label, specs[i].parent, {}};
    for (std::size_t k : kids[i]) n.children.push_back(specs[k].id);
    t.nodes_.push_back(std::move(n));
    for (auto it = kids[i].rbegin(); it != kids[i].rend(); ++it) stack.push_back(*it);
  }
  if (t.nodes_.size() != specs.size()) {
    throw Error(ErrorCode::kMalformedDocument, "taxonomy contains a cycle");
  }
  t.finalize();
  return t;
}

void Taxonomy::finalize() {
  index_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].id, i);
  depth_.assign(nodes_.size(), 0);
  parent_index_.assign(nodes_.size(), -1);
  // Pre-order guarantees a parent precedes its children.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].parent) {
      const std::size_t p = index_.at(*nodes_[i].parent);
      parent_index_[i] = static_cast<int>(p);
      depth_[i] = depth_[p] + 1;
    }
  }
}

std::string Taxonomy::to_xml() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<taxonomy>\n";
  write_node(*this, nodes_.front(), 1, out);
  out << "</taxonomy>\n";
  return out.str();
}

bool Taxonomy::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t Taxonomy::index_of(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownKeyword, "unknown keyword '" + std::string(id) + "'");
  }
  return it->second;
}

const Taxonomy::Node& Taxonomy::node(std::string_view id) const {
  return nodes_[index_of(id)];
}

const std::vector<KeywordId>& Taxonomy::children(std::string_view id) const {
  return node(id).children;
}

const std::optional<KeywordId>& Taxonomy::parent(std::string_view id) const {
  return node(id).parent;
}

int Taxonomy::depth(std::string_view id) const { return depth_[index_of(id)]; }

int Taxonomy::max_depth() const {
  return *std::max_element(depth_.begin(), depth_.end());
}

KeywordId Taxonomy::lca(std::string_view a, std::string_view b) const {
  auto i = static_cast<int>(index_of(a));
  auto j = static_cast<int>(index_of(b));
  while (depth_[i] > depth_[j]) i = parent_index_[i];
  while (depth_[j] > depth_[i]) j = parent_index_[j];
  while (i != j) {
    i = parent_index_[i];
    j = parent_index_[j];
  }
  return nodes_[i].id;
}

bool Taxonomy::is_parent_of(std::string_view parent_id, std::string_view child_id) const {
  const auto& p = nodes_[index_of(child_id)].parent;
  index_of(parent_id);
  return p && *p == parent_id;
}

bool operator==(const Taxonomy& a, const Taxonomy& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.id != y.id || x.label != y.label || x.parent != y.parent ||
        x.children != y.children) {
      return false;
    }
  }
  return true;
}

}  // namespace confassign

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

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "confassign/bibliography.hpp"
#include "confassign/taxonomy.hpp"
#include "confassign/workflow.hpp"

namespace confassign::gateway {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// One conference document on disk. Relative taxonomy and bibliography
/// references resolve against the document's directory.
class DocumentStore {
 public:
  explicit DocumentStore(std::filesystem::path document);

  const std::filesystem::path& path() const { return path_; }
  bool exists() const;

  WorkflowState load() const;
  void save(const WorkflowState& state) const;

  std::filesystem::path resolve(const std::string& ref) const;
  // Path of `file` expressed relative to the document directory when possible.
  std::string make_ref(const std::filesystem::path& file) const;

  std::shared_ptr<const Taxonomy> load_taxonomy(const Conference& conf) const;
  // nullptr when the conference names no bibliography.
  std::shared_ptr<const BibCorpus> load_corpus(const Conference& conf) const;

  Workflow open(Clock clock) const;

 private:
  std::filesystem::path path_;
};

// Parses "paper:reviewer". Throws MalformedDocument.
PairKey parse_pair(std::string_view text);

nlohmann::json to_json(const WorkflowStatus& status);
nlohmann::json to_json(const CoISet& conflicts);

}  // namespace confassign::gateway

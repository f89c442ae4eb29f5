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

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace confassign {

struct BibRecord {
  std::string kind;  // "article" or "inproceedings"
  std::string key;
  std::string title;
  int year = 0;
  std::vector<std::string> authors;

  friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

/// Offline stand-in for a bibliographic index: records from a DBLP-subset
/// dump plus an index from author NameKey to records.
class BibCorpus {
 public:
  BibCorpus() = default;

  /// Records sorted by key; a later duplicate key replaces the earlier one.
  const std::vector<BibRecord>& records() const { return records_; }
  std::size_t skipped() const { return skipped_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Indices into records() that list an author with the given NameKey.
  const std::vector<std::size_t>& records_by_author(std::string_view name) const;

  std::string to_xml() const;

  friend BibCorpus ingest_bibliography(std::string_view document);

 private:
  void build_index();

  std::vector<BibRecord> records_;
  std::size_t skipped_ = 0;
  std::vector<std::string> warnings_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_author_;
};

/// Parses `<dblp>` with `<article>` / `<inproceedings>` children. Records
/// missing a usable year or any author are skipped and counted. Throws
/// Error(MalformedXml) on malformed input.
BibCorpus ingest_bibliography(std::string_view document);

}  // namespace confassign

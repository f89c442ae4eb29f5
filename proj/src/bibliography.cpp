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

#include "confassign/bibliography.hpp"

#include <charconv>
#include <sstream>

#include "confassign/error.hpp"
#include "confassign/names.hpp"
#include "xml_util.hpp"

namespace confassign {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

BibCorpus ingest_bibliography(std::string_view document) {
  if (detail::is_blank(document)) throw Error(ErrorCode::kEmptyDocument, "bibliography is empty");
  const pt::ptree tree = detail::parse_xml(document);
  const auto dblp = tree.get_child_optional("dblp");
  if (!dblp) throw Error(ErrorCode::kMalformedXml, "expected a <dblp> document element");

  BibCorpus corpus;
  std::map<std::string, BibRecord> by_key;
  for (const auto& [kind, element] : *dblp) {
    if (kind != "article" && kind != "inproceedings") continue;
    BibRecord rec;
    rec.kind = kind;
    rec.key = element.get<std::string>("<xmlattr>.key", "");
    bool has_year = false;
    for (const auto& [field, child] : element) {
      const std::string value = trim(child.data());
      if (field == "author") {
        if (!value.empty()) rec.authors.push_back(value);
      } else if (field == "title") {
        rec.title = value;
      } else if (field == "year") {
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), rec.year);
        has_year = ec == std::errc() && ptr == value.data() + value.size() && rec.year > 0;
      }
    }
    if (rec.key.empty() || !has_year || rec.authors.empty()) {
      ++corpus.skipped_;
      corpus.warnings_.push_back("skipped <" + kind + "> '" + rec.key +
                                 "': missing key, year or authors");
      continue;
    }
    auto [it, inserted] = by_key.try_emplace(rec.key, rec);
    if (!inserted) {
      corpus.warnings_.push_back("duplicate key '" + rec.key + "': keeping the later record");
      it->second = std::move(rec);
    }
  }
  for (auto& [_, rec] : by_key) corpus.records_.push_back(std::move(rec));
  corpus.build_index();
  return corpus;
}

void BibCorpus::build_index() {
  by_author_.clear();
  for (std::size_t i = 0; i < records_.size(); ++i) {
    for (const auto& author : records_[i].authors) {
      auto& list = by_author_[name_key(author).str()];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
  }
}

const std::vector<std::size_t>& BibCorpus::records_by_author(std::string_view name) const {
  static const std::vector<std::size_t> kNone;
  const auto it = by_author_.find(name_key(name).str());
  return it == by_author_.end() ? kNone : it->second;
}

std::string BibCorpus::to_xml() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<dblp>\n";
  for (const auto& r : records_) {
    out << "  <" << r.kind << " key=\"" << detail::escape_xml(r.key) << "\">\n";
    for (const auto& a : r.authors) out << "    <author>" << detail::escape_xml(a) << "</author>\n";
    out << "    <title>" << detail::escape_xml(r.title) << "</title>\n";
    out << "    <year>" << r.year << "</year>\n";
    out << "  </" << r.kind << ">\n";
  }
  out << "</dblp>\n";
  return out.str();
}

}  // namespace confassign

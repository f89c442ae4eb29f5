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

#include "confassign/gateway/store.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace confassign::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out.flush()) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot replace " + path.string() + ": " + ec.message());
}

DocumentStore::DocumentStore(fs::path document) : path_(std::move(document)) {}

bool DocumentStore::exists() const { return fs::exists(path_); }

WorkflowState DocumentStore::load() const { return load_document(read_file(path_)); }

void DocumentStore::save(const WorkflowState& state) const {
  write_file_atomic(path_, save_document(state));
}

fs::path DocumentStore::resolve(const std::string& ref) const {
  const fs::path p(ref);
  if (p.is_absolute()) return p;
  return path_.parent_path() / p;
}

std::string DocumentStore::make_ref(const fs::path& file) const {
  std::error_code ec;
  const fs::path base = fs::absolute(path_, ec).parent_path();
  const fs::path target = fs::absolute(file, ec);
  const fs::path rel = fs::proximate(target, base, ec);
  return (ec ? target : rel).generic_string();
}

std::shared_ptr<const Taxonomy> DocumentStore::load_taxonomy(const Conference& conf) const {
  if (conf.taxonomy_ref.empty()) {
    throw Error(ErrorCode::kInvalidConference, "no taxonomy imported");
  }
  return std::make_shared<const Taxonomy>(Taxonomy::from_xml(read_file(resolve(conf.taxonomy_ref))));
}

std::shared_ptr<const BibCorpus> DocumentStore::load_corpus(const Conference& conf) const {
  if (conf.config.bibliography_ref.empty()) return nullptr;
  return std::make_shared<const BibCorpus>(
      ingest_bibliography(read_file(resolve(conf.config.bibliography_ref))));
}

Workflow DocumentStore::open(Clock clock) const {
  WorkflowState state = load();
  auto taxonomy = load_taxonomy(state.conference);
  auto corpus = load_corpus(state.conference);
  return Workflow(std::move(state), std::move(taxonomy), std::move(corpus), std::move(clock));
}

PairKey parse_pair(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size() ||
      text.find(':', colon + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kMalformedDocument,
                "expected paper:reviewer, got '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

json to_json(const WorkflowStatus& s) {
  return json{{"stage", to_string(s.stage)}, {"edges", s.edges},         {"pending", s.pending},
              {"approved", s.approved},     {"conflicts", s.conflicts}, {"warnings", s.warnings}};
}

json to_json(const CoISet& conflicts) {
  json list = json::array();
  for (const auto& c : conflicts) list.push_back(confassign::to_json(c));
  return json{{"conflicts", list}};
}

}  // namespace confassign::gateway

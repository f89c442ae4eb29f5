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

#include "confassign/gateway/service.hpp"

#include <mutex>
#include <optional>
#include <vector>

#include "httplib.h"

#include "confassign/coi.hpp"

namespace confassign::gateway {

using nlohmann::json;

namespace {

constexpr const char* kDefaultActor = "chair";

Response ok(json body) { return {200, body.dump()}; }

Response error_response(int status, std::string_view name, const std::string& message,
                        json extra = json::object()) {
  json body = {{"error", name}, {"message", message}};
  body.update(extra);
  return {status, body.dump()};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto slash = path.find('/', start);
    const auto end = slash == std::string::npos ? path.size() : slash;
    if (end > start) parts.push_back(path.substr(start, end - start));
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  return parts;
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  json j = json::parse(body);
  if (!j.is_object()) throw Error(ErrorCode::kMalformedDocument, "request body must be an object");
  return j;
}

std::string field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorCode::kMalformedDocument, std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

std::string actor_of(const json& j) {
  return j.contains("actor") ? field(j, "actor") : std::string(kDefaultActor);
}

std::set<PairKey> pair_set(const json& j, const char* key) {
  std::set<PairKey> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) {
    throw Error(ErrorCode::kMalformedDocument, std::string("'") + key + "' must be a list");
  }
  for (const auto& item : j.at(key)) {
    if (item.is_string()) {
      out.insert(parse_pair(item.get<std::string>()));
    } else if (item.is_object()) {
      out.insert({field(item, "paper_id"), field(item, "reviewer_id")});
    } else {
      throw Error(ErrorCode::kMalformedDocument, "pairs are \"paper:reviewer\" or objects");
    }
  }
  return out;
}

std::optional<std::vector<int>> edge_selection(const json& j) {
  if (!j.contains("edge_ids")) throw Error(ErrorCode::kMalformedDocument, "missing 'edge_ids'");
  const auto& ids = j.at("edge_ids");
  if (ids.is_string() && ids.get<std::string>() == "all") return std::nullopt;
  if (!ids.is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "'edge_ids' must be \"all\" or a list of ids");
  }
  std::vector<int> out;
  for (const auto& id : ids) {
    if (!id.is_number_integer()) throw Error(ErrorCode::kMalformedDocument, "edge ids are integers");
    out.push_back(id.get<int>());
  }
  return out;
}

json stage_json(const Workflow& w) { return json{{"stage", to_string(w.stage())}}; }

}  // namespace

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownPaper:
    case ErrorCode::kUnknownReviewer:
    case ErrorCode::kUnknownId:
    case ErrorCode::kUnknownEdge:
      return 404;
    case ErrorCode::kIllegalState:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kConflictRequiresForce:
    case ErrorCode::kCapacityRequiresForce:
    case ErrorCode::kInfeasible:
      return 409;
    case ErrorCode::kIoError:
    case ErrorCode::kSchemaVersionMismatch:
      return 500;
    default:
      return 400;
  }
}

Service::Service(DocumentStore store, Clock clock)
    : store_(std::move(store)), clock_(std::move(clock)) {}

Response Service::handle(const std::string& method, const std::string& path,
                         const std::string& body) {
  try {
    return dispatch(method, path, body);
  } catch (const InfeasibleError& e) {
    return error_response(status_for(e.code()), e.name(), e.what(), {{"starved", e.starved()}});
  } catch (const Error& e) {
    return error_response(status_for(e.code()), e.name(), e.what());
  } catch (const json::exception& e) {
    return error_response(400, to_string(ErrorCode::kMalformedDocument), e.what());
  }
}

Response Service::dispatch(const std::string& method, const std::string& path,
                           const std::string& body) {
  const auto parts = split_path(path);
  if (parts.size() < 2 || parts[0] != "api") {
    return error_response(404, "NotFound", "no route for " + path);
  }
  const std::string& res = parts[1];
  const bool is_get = method == "GET";
  const bool is_post = method == "POST";

  // Reads
  if (is_get && parts.size() == 2) {
    std::shared_lock lock(mutex_);
    if (res == "status") return ok(to_json(store_.open(clock_).status()));
    if (res == "matrix" || res == "proposal") {
      const WorkflowState state = store_.load();
      if (res == "matrix") {
        if (!state.matrix) throw Error(ErrorCode::kIllegalState, "matrix has not been built");
        return ok(to_json(*state.matrix));
      }
      if (!state.proposal) throw Error(ErrorCode::kIllegalState, "no proposal yet");
      json out = to_json(*state.proposal);
      out["stage"] = to_string(state.stage);
      return ok(out);
    }
    if (res == "coi") {
      const WorkflowState state = store_.load();
      if (state.matrix) return ok(to_json(state.conflicts));
      const auto corpus = store_.load_corpus(state.conference);
      return ok(to_json(detect_all(state.conference, corpus.get())));
    }
  }
  if (is_post && parts.size() == 2 && res == "whatif") {
    const json req = parse_body(body);
    std::shared_lock lock(mutex_);
    const Workflow w = store_.open(clock_);
    const AssignmentProposal prop = w.what_if(pair_set(req, "pinned"), pair_set(req, "forbidden"));
    json out = to_json(prop);
    out["total_weight"] = score_proposal(prop, *w.state().matrix).total_weight;
    return ok(out);
  }

  // Mutations
  if (is_post && parts.size() == 2 &&
      (res == "build-matrix" || res == "propose" || res == "approve" || res == "edges")) {
    const json req = parse_body(body);
    const std::string actor = actor_of(req);
    std::unique_lock lock(mutex_);
    Workflow w = store_.open(clock_);
    json out;
    if (res == "build-matrix") {
      w.run_pipeline(actor);
      out = stage_json(w);
    } else if (res == "propose") {
      w.propose(actor);
      out = stage_json(w);
      out["proposal"] = to_json(*w.state().proposal);
    } else if (res == "approve") {
      w.approve(edge_selection(req), actor);
      out = stage_json(w);
    } else {
      const bool force = req.contains("force") ? req.at("force").get<bool>() : false;
      const AssignmentEdge e =
          w.manual_assign(field(req, "paper_id"), field(req, "reviewer_id"), force, actor);
      out = stage_json(w);
      out["edge"] = to_json(AssignmentProposal{{e}})["edges"][0];
    }
    store_.save(w.state());
    return ok(out);
  }
  if (method == "DELETE" && parts.size() == 4 && res == "edges") {
    std::unique_lock lock(mutex_);
    Workflow w = store_.open(clock_);
    w.manual_unassign(parts[2], parts[3], kDefaultActor);
    store_.save(w.state());
    return ok(stage_json(w));
  }
  return error_response(404, "NotFound", "no route for " + method + " " + path);
}

void Service::bind(httplib::Server& server) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Get(R"(/api/.*)", route);
  server.Post(R"(/api/.*)", route);
  server.Delete(R"(/api/.*)", route);
}

}  // namespace confassign::gateway

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

#include "confassign/gateway/cli.hpp"

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"

#include "confassign/coi.hpp"
#include "confassign/gateway/service.hpp"
#include "confassign/gateway/store.hpp"

namespace confassign::gateway {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  std::string conference;
  std::string format = "text";
  std::string actor = "chair";
};

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string export_csv(const WorkflowState& state) {
  if (!state.proposal) throw Error(ErrorCode::kIllegalState, "nothing to export before propose");
  std::string out = "paper_id,reviewer_id,factor,provenance,pass,origin,approval\n";
  const SimilarityMatrix& m = *state.matrix;
  for (const auto& e : state.proposal->edges) {
    const auto prov = m.provenance(m.paper_index(e.paper_id), m.reviewer_index(e.reviewer_id));
    out += csv_field(e.paper_id) + "," + csv_field(e.reviewer_id) + "," + format_number(e.factor) +
           "," + std::string(to_string(prov)) + "," + std::to_string(e.pass) + "," +
           std::string(to_string(e.origin)) + "," + std::string(to_string(e.approval)) + "\n";
  }
  return out;
}

// Setup commands edit the conference itself, which is only sound before the
// audit log starts; otherwise replay would run against different inputs.
WorkflowState setup_state(const DocumentStore& store) {
  if (!store.exists()) return {};
  WorkflowState s = store.load();
  if (s.stage != Stage::kDraft || !s.audit.empty()) {
    throw Error(ErrorCode::kIllegalState, "conference inputs are frozen once the pipeline has run");
  }
  return s;
}

void validate_if_possible(const DocumentStore& store, const Conference& conf) {
  if (conf.taxonomy_ref.empty() || conf.papers.empty()) return;
  validate(conf, *store.load_taxonomy(conf));
}

std::string rebase_ref(const DocumentStore& store, const fs::path& source, const std::string& ref) {
  if (ref.empty() || fs::path(ref).is_absolute()) return ref;
  return store.make_ref(source.parent_path() / ref);
}

void print_proposal_text(std::ostream& out, const AssignmentProposal& p) {
  for (const auto& e : p.edges) {
    out << e.id << '\t' << e.paper_id << '\t' << e.reviewer_id << '\t' << format_number(e.factor)
        << "\tpass " << e.pass << '\t' << to_string(e.origin) << '\t' << to_string(e.approval)
        << '\n';
  }
}

void print_conflicts_text(std::ostream& out, const CoISet& conflicts) {
  for (const auto& c : conflicts) {
    out << c.paper_id << '\t' << c.reviewer_id << '\t' << to_string(c.reason) << '\t' << c.evidence
        << '\n';
  }
  out << conflicts.size() << " conflict(s)\n";
}

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out, const CliOptions& options)
      : g_(g), out_(out), options_(options) {}

  bool json_mode() const { return g_.format == "json"; }

  DocumentStore store() const {
    if (g_.conference.empty()) throw CLI::RequiredError("--conference");
    return DocumentStore(g_.conference);
  }

  void emit(const json& payload, const std::string& text) {
    if (json_mode()) {
      out_ << payload.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

  void emit_stage(const Workflow& w) {
    emit(json{{"stage", to_string(w.stage())}}, "stage: " + std::string(to_string(w.stage())) + "\n");
  }

  void import_taxonomy(const std::string& file) {
    const DocumentStore s = store();
    const Taxonomy t = Taxonomy::from_xml(read_file(file));
    WorkflowState state = setup_state(s);
    state.conference.taxonomy_ref = s.make_ref(file);
    validate_if_possible(s, state.conference);
    s.save(state);
    emit(json{{"taxonomy_ref", state.conference.taxonomy_ref}, {"nodes", t.size()}},
         "imported " + std::to_string(t.size()) + " keywords\n");
  }

  void import_conference(const std::string& file) {
    const DocumentStore s = store();
    const json j = json::parse(read_file(file), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kMalformedDocument, file + " is not a JSON object");
    }
    Conference conf = conference_from_json(j);
    WorkflowState state = setup_state(s);
    conf.taxonomy_ref = conf.taxonomy_ref.empty() ? state.conference.taxonomy_ref
                                                  : rebase_ref(s, file, conf.taxonomy_ref);
    conf.config.bibliography_ref = conf.config.bibliography_ref.empty()
                                       ? state.conference.config.bibliography_ref
                                       : rebase_ref(s, file, conf.config.bibliography_ref);
    validate_if_possible(s, conf);
    state = WorkflowState{};
    state.conference = std::move(conf);
    s.save(state);
    const auto& c = state.conference;
    emit(json{{"papers", c.papers.size()}, {"reviewers", c.reviewers.size()}, {"stage", "Draft"}},
         "imported " + std::to_string(c.papers.size()) + " papers, " +
             std::to_string(c.reviewers.size()) + " reviewers\n");
  }

  void ingest_bib(const std::string& file) {
    const DocumentStore s = store();
    const BibCorpus corpus = ingest_bibliography(read_file(file));
    WorkflowState state = setup_state(s);
    state.conference.config.bibliography_ref = s.make_ref(file);
    s.save(state);
    std::string text = "ingested " + std::to_string(corpus.records().size()) + " records, skipped " +
                       std::to_string(corpus.skipped()) + "\n";
    for (const auto& w : corpus.warnings()) text += "warning: " + w + "\n";
    emit(json{{"records", corpus.records().size()},
              {"skipped", corpus.skipped()},
              {"warnings", corpus.warnings()}},
         text);
  }

  void detect_coi(const std::string& bib) {
    const DocumentStore s = store();
    const WorkflowState state = s.load();
    std::shared_ptr<const BibCorpus> corpus =
        bib.empty() ? s.load_corpus(state.conference)
                    : std::make_shared<const BibCorpus>(ingest_bibliography(read_file(bib)));
    const CoISet conflicts = detect_all(state.conference, corpus.get());
    std::ostringstream text;
    print_conflicts_text(text, conflicts);
    emit(to_json(conflicts), text.str());
  }

  template <typename Op>
  void mutate(Op op) {
    const DocumentStore s = store();
    Workflow w = s.open(options_.clock);
    op(w);
    s.save(w.state());
  }

  void build_matrix() {
    mutate([&](Workflow& w) {
      w.run_pipeline(g_.actor);
      emit_stage(w);
    });
  }

  void propose() {
    mutate([&](Workflow& w) {
      const auto& p = w.propose(g_.actor);
      std::ostringstream text;
      print_proposal_text(text, p);
      text << "stage: " << to_string(w.stage()) << '\n';
      emit(json{{"stage", to_string(w.stage())}, {"proposal", to_json(p)}}, text.str());
    });
  }

  void approve(bool all, const std::vector<int>& ids) {
    mutate([&](Workflow& w) {
      w.approve(all ? std::nullopt : std::optional(ids), g_.actor);
      emit_stage(w);
    });
  }

  void assign(const std::string& paper, const std::string& reviewer, bool force) {
    mutate([&](Workflow& w) {
      const AssignmentEdge e = w.manual_assign(paper, reviewer, force, g_.actor);
      std::ostringstream text;
      print_proposal_text(text, AssignmentProposal{{e}});
      text << "stage: " << to_string(w.stage()) << '\n';
      emit(json{{"stage", to_string(w.stage())}, {"edge", to_json(AssignmentProposal{{e}})["edges"][0]}},
           text.str());
    });
  }

  void unassign(const std::string& paper, const std::string& reviewer) {
    mutate([&](Workflow& w) {
      w.manual_unassign(paper, reviewer, g_.actor);
      emit_stage(w);
    });
  }

  void what_if(const std::vector<std::string>& pins, const std::vector<std::string>& forbids) {
    std::set<PairKey> pinned, forbidden;
    for (const auto& p : pins) pinned.insert(parse_pair(p));
    for (const auto& f : forbids) forbidden.insert(parse_pair(f));
    const Workflow w = store().open(options_.clock);
    const AssignmentProposal p = w.what_if(pinned, forbidden);
    const double total = score_proposal(p, *w.state().matrix).total_weight;
    json payload = to_json(p);
    payload["total_weight"] = total;
    std::ostringstream text;
    print_proposal_text(text, p);
    text << "total weight: " << format_number(total) << '\n';
    emit(payload, text.str());
  }

  void export_files(const std::string& output, const std::string& audit) {
    const WorkflowState state = store().load();
    const std::string csv = export_csv(state);
    if (!audit.empty()) write_file_atomic(audit, audit_jsonl(state.audit));
    if (output.empty() || output == "-") {
      out_ << csv;
      return;
    }
    write_file_atomic(output, csv);
    const auto rows = state.proposal->edges.size();
    emit(json{{"rows", rows}, {"output", output}},
         "wrote " + std::to_string(rows) + " rows to " + output + "\n");
  }

  void serve(const std::string& host, int port) {
    const DocumentStore s = store();
    s.open(options_.clock);  // fail fast on an unreadable conference
    Service service(s, options_.clock);
    httplib::Server server;
    service.bind(server);
    out_ << "serving " << g_.conference << " on http://" << host << ":" << port << std::endl;
    if (!server.listen(host, port)) {
      throw Error(ErrorCode::kIoError, "cannot listen on " + host + ":" + std::to_string(port));
    }
  }

 private:
  const Globals& g_;
  std::ostream& out_;
  const CliOptions& options_;
};

std::string check_pair(const std::string& text) {
  try {
    parse_pair(text);
    return {};
  } catch (const Error&) {
    return "expected paper:reviewer";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliOptions& options) {
  CLI::App app{"Reviewer assignment for conference program committees", "confassign"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--conference", g.conference, "Conference document (JSON)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--actor", g.actor, "Name recorded in the audit log");

  std::string file, bib, paper, reviewer, output, audit, host = "127.0.0.1";
  std::vector<std::string> pins, forbids;
  std::vector<int> edge_ids;
  bool all = false, force = false;
  int port = 8080;

  auto* imp_tax = app.add_subcommand("import-taxonomy", "Import a keyword taxonomy (XML)");
  imp_tax->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* imp_conf = app.add_subcommand("import-conference", "Import papers, reviewers and config");
  imp_conf->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* ingest = app.add_subcommand("ingest-bib", "Attach a DBLP-style bibliography dump");
  ingest->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* coi = app.add_subcommand("detect-coi", "Report conflicts of interest");
  coi->add_option("--bib", bib, "Bibliography dump to use")->check(CLI::ExistingFile);
  auto* build = app.add_subcommand("build-matrix", "Compute the similarity matrix");
  auto* propose = app.add_subcommand("propose", "Solve and store a proposal");
  auto* approve = app.add_subcommand("approve", "Approve proposal edges");
  auto* all_flag = approve->add_flag("--all", all, "Approve every edge");
  auto* edge_opt = approve->add_option("--edge", edge_ids, "Edge id (repeatable)");
  all_flag->excludes(edge_opt);
  approve->require_option(1);
  auto* assign = app.add_subcommand("assign", "Add a manual edge");
  assign->add_option("--paper", paper)->required();
  assign->add_option("--reviewer", reviewer)->required();
  assign->add_flag("--force", force, "Override a conflict or capacity limit");
  auto* unassign = app.add_subcommand("unassign", "Remove an edge");
  unassign->add_option("--paper", paper)->required();
  unassign->add_option("--reviewer", reviewer)->required();
  auto* whatif = app.add_subcommand("what-if", "Solve with pins and exclusions without saving");
  whatif->add_option("--pin", pins, "paper:reviewer (repeatable)")->check(check_pair);
  whatif->add_option("--forbid", forbids, "paper:reviewer (repeatable)")->check(check_pair);
  auto* exp = app.add_subcommand("export", "Write the assignment CSV");
  exp->add_option("--output,-o", output, "CSV path (default: standard output)");
  exp->add_option("--audit", audit, "Also write the audit log as JSON lines");
  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve->add_option("--host", host);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner r(g, out, options);
  try {
    if (*imp_tax) r.import_taxonomy(file);
    else if (*imp_conf) r.import_conference(file);
    else if (*ingest) r.ingest_bib(file);
    else if (*coi) r.detect_coi(bib);
    else if (*build) r.build_matrix();
    else if (*propose) r.propose();
    else if (*approve) r.approve(all, edge_ids);
    else if (*assign) r.assign(paper, reviewer, force);
    else if (*unassign) r.unassign(paper, reviewer);
    else if (*whatif) r.what_if(pins, forbids);
    else if (*exp) r.export_files(output, audit);
    else if (*serve) r.serve(host, port);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace confassign::gateway

// Copyright 2026 The Namelink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "namelink/review_service.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <map>
#include <mutex>

#include "httplib.h"
#include "json.hpp"
#include "namelink/metrics.h"

namespace namelink {
namespace {

using nlohmann::json;

std::string NowUtc() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

json CandidateJson(const Candidate& c) {
  return {{"dest_id", c.dest_id},       {"dest_name", c.dest_name},
          {"wat", c.wat},               {"at", c.at},
          {"edit_distance", c.edit_distance}, {"relax_level", c.relax_level}};
}

json ItemJson(const ReviewItem& item) {
  json candidates = json::array();
  for (const Candidate& c : item.decision.candidates) {
    candidates.push_back(CandidateJson(c));
  }
  return {{"id", item.id},
          {"status", ReviewStatusName(item.status)},
          {"source_id", item.decision.source_id},
          {"source_name", item.decision.source_name},
          {"machine_multiplicity", item.decision.Multiplicity()},
          {"candidates", candidates},
          {"accepted", item.accepted},
          {"decided_by", item.decided_by},
          {"decided_at", item.decided_at}};
}

json ErrorJson(const std::string& message) { return {{"error", message}}; }

}  // namespace

std::string_view ReviewStatusName(ReviewStatus status) {
  switch (status) {
    case ReviewStatus::kPending: return "pending";
    case ReviewStatus::kAccepted: return "accepted";
    case ReviewStatus::kRejected: return "rejected";
  }
  return "pending";
}

std::optional<ReviewStatus> ParseReviewStatus(std::string_view text) {
  for (ReviewStatus s : {ReviewStatus::kPending, ReviewStatus::kAccepted,
                         ReviewStatus::kRejected}) {
    if (ReviewStatusName(s) == text) return s;
  }
  return std::nullopt;
}

ReviewQueue::ReviewQueue(std::vector<MatchDecision> results,
                         ExpertLabels labels, std::string journal_path)
    : results_(std::move(results)),
      labels_(std::move(labels)),
      journal_path_(std::move(journal_path)) {
  for (const MatchDecision& d : results_) {
    if (d.outcome != Outcome::kPossible) continue;
    ReviewItem item;
    item.id = static_cast<int>(items_.size()) + 1;
    item.decision = d;
    items_.push_back(std::move(item));
  }
  if (journal_path_.empty()) return;
  Replay();
  journal_.open(journal_path_, std::ios::app | std::ios::binary);
  if (!journal_) {
    throw Error(ErrorCode::kIoError, "cannot open journal " + journal_path_);
  }
}

void ReviewQueue::Replay() {
  std::ifstream in(journal_path_, std::ios::binary);
  if (!in) return;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedData,
                   journal_path_ + " line " + std::to_string(line_no) + ": " +
                       why);
    };
    try {
      json entry = json::parse(line);
      int id = entry.at("pair_id").get<int>();
      if (id < 1 || id > static_cast<int>(items_.size()) ||
          items_[id - 1].decision.source_id !=
              entry.at("source_id").get<std::string>()) {
        throw bad("entry does not belong to this queue");
      }
      ReviewDecision decision;
      decision.reject = entry.at("action").get<std::string>() == "reject";
      decision.accept = entry.at("dest_ids").get<std::vector<std::string>>();
      decision.reviewer = entry.value("reviewer", "");
      ApplyLocked(id, decision, entry.at("decided_at").get<std::string>());
    } catch (const json::exception& e) {
      throw bad(e.what());
    } catch (const ReviewError& e) {
      throw bad(e.what());
    }
  }
}

std::vector<ReviewItem> ReviewQueue::List(std::optional<ReviewStatus> status,
                                          size_t offset, size_t limit,
                                          size_t* total) const {
  std::shared_lock lock(mutex_);
  std::vector<ReviewItem> out;
  size_t count = 0;
  for (const ReviewItem& item : items_) {
    if (status && item.status != *status) continue;
    if (count >= offset && out.size() < limit) out.push_back(item);
    ++count;
  }
  if (total != nullptr) *total = count;
  return out;
}

ReviewItem ReviewQueue::Get(int id) const {
  std::shared_lock lock(mutex_);
  if (id < 1 || id > static_cast<int>(items_.size())) {
    throw ReviewError(404, "no pair " + std::to_string(id));
  }
  return items_[id - 1];
}

ReviewItem ReviewQueue::ApplyLocked(int id, const ReviewDecision& decision,
                                    const std::string& decided_at) {
  if (id < 1 || id > static_cast<int>(items_.size())) {
    throw ReviewError(404, "no pair " + std::to_string(id));
  }
  ReviewItem& item = items_[id - 1];
  if (item.status != ReviewStatus::kPending) {
    throw ReviewError(409, "pair " + std::to_string(id) + " already decided");
  }
  if (decision.reject == !decision.accept.empty()) {
    throw ReviewError(400, "give either a non-empty accept list or reject");
  }
  std::set<std::string> offered = item.decision.DestIds();
  std::set<std::string> accepted;
  for (const std::string& dest : decision.accept) {
    if (offered.count(dest) == 0) {
      throw ReviewError(400, "'" + dest + "' is not a candidate of pair " +
                                 std::to_string(id));
    }
    accepted.insert(dest);
  }
  item.status =
      decision.reject ? ReviewStatus::kRejected : ReviewStatus::kAccepted;
  item.accepted.assign(accepted.begin(), accepted.end());
  item.decided_by = decision.reviewer;
  item.decided_at = decided_at;
  return item;
}

ReviewItem ReviewQueue::Decide(int id, const ReviewDecision& decision,
                               std::string decided_at) {
  if (decided_at.empty()) decided_at = NowUtc();
  std::unique_lock lock(mutex_);
  // Validate against a copy first so a failed request leaves no trace.
  ReviewItem before = id >= 1 && id <= static_cast<int>(items_.size())
                          ? items_[id - 1]
                          : ReviewItem{};
  ReviewItem after = ApplyLocked(id, decision, decided_at);
  if (journal_.is_open()) {
    json entry = {{"pair_id", id},
                  {"source_id", after.decision.source_id},
                  {"action", decision.reject ? "reject" : "accept"},
                  {"dest_ids", after.accepted},
                  {"reviewer", decision.reviewer},
                  {"decided_at", decided_at}};
    journal_ << entry.dump() << '\n';
    journal_.flush();
    if (!journal_) {
      items_[id - 1] = before;
      throw ReviewError(500, "journal write failed");
    }
  }
  return after;
}

std::string ReviewQueue::MetricsJson() const {
  std::shared_lock lock(mutex_);
  ExpertLabels labels = labels_;
  std::map<size_t, size_t> pending;
  for (const ReviewItem& item : items_) {
    if (item.status == ReviewStatus::kPending) {
      ++pending[item.decision.Multiplicity()];
      continue;
    }
    labels[item.decision.source_id] =
        std::set<std::string>(item.accepted.begin(), item.accepted.end());
  }
  std::vector<MatchDecision> reviewed;
  ExpertLabels reviewed_labels;
  size_t unreviewed = 0;
  for (const MatchDecision& d : results_) {
    auto it = labels.find(d.source_id);
    if (it == labels.end()) {
      ++unreviewed;
      continue;
    }
    reviewed.push_back(d);
    reviewed_labels.insert(*it);
  }
  json pending_rows = json::array();
  size_t pending_total = 0;
  for (const auto& [k, count] : pending) {
    pending_rows.push_back({{"machine", k}, {"count", count}});
    pending_total += count;
  }
  json out = {{"reviewed", reviewed.size()},
              {"unreviewed", unreviewed},
              {"pending", {{"count", pending_total},
                           {"by_machine_multiplicity", pending_rows}}}};
  if (reviewed.empty()) {
    out["report"] = nullptr;
  } else {
    ConfusionMatrix m = BuildMatrix(reviewed, reviewed_labels);
    out["report"] = json::parse(ReportToJson(ComputeReport(m), m));
  }
  return out.dump();
}

std::string ReviewQueue::ItemToJson(const ReviewItem& item) {
  return ItemJson(item).dump();
}

ReviewDecision ReviewQueue::ParseDecision(std::string_view body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ReviewError(400, "decision must be a JSON object");
  }
  ReviewDecision decision;
  if (doc.contains("reject")) {
    if (!doc["reject"].is_boolean()) {
      throw ReviewError(400, "reject must be true or false");
    }
    decision.reject = doc["reject"].get<bool>();
  }
  if (doc.contains("accept")) {
    const json& accept = doc["accept"];
    if (!accept.is_array()) throw ReviewError(400, "accept must be a list");
    for (const json& id : accept) {
      if (!id.is_string()) {
        throw ReviewError(400, "accept entries must be strings");
      }
      decision.accept.push_back(id.get<std::string>());
    }
  }
  if (doc.contains("reviewer")) {
    if (!doc["reviewer"].is_string()) {
      throw ReviewError(400, "reviewer must be a string");
    }
    decision.reviewer = doc["reviewer"].get<std::string>();
  }
  if (decision.reject == !decision.accept.empty()) {
    throw ReviewError(400, "give either a non-empty accept list or reject");
  }
  return decision;
}

struct ReviewServer::Impl {
  ReviewQueue& queue;
  httplib::Server server;
};

ReviewServer::ReviewServer(ReviewQueue& queue, std::string static_dir)
    : impl_(new Impl{queue, {}}) {
  httplib::Server& svr = impl_->server;
  ReviewQueue* q = &queue;
  auto send = [](httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  };
  auto guarded = [send](auto handler) {
    return [send, handler](const httplib::Request& req,
                           httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const ReviewError& e) {
        send(res, e.status(), ErrorJson(e.what()));
      } catch (const std::exception& e) {
        send(res, 500, ErrorJson(e.what()));
      }
    };
  };
  auto parse_size = [](const httplib::Request& req, const char* key,
                       size_t fallback) {
    if (!req.has_param(key)) return fallback;
    const std::string value = req.get_param_value(key);
    if (value.empty() ||
        !std::all_of(value.begin(), value.end(),
                     [](char c) { return c >= '0' && c <= '9'; }) ||
        value.size() > 9) {
      throw ReviewError(400, std::string("bad ") + key);
    }
    return static_cast<size_t>(std::stoul(value));
  };

  svr.Get("/pairs", guarded([=](const httplib::Request& req,
                                httplib::Response& res) {
    std::optional<ReviewStatus> status = ReviewStatus::kPending;
    if (req.has_param("status")) {
      std::string value = req.get_param_value("status");
      if (value == "all") {
        status.reset();
      } else {
        status = ParseReviewStatus(value);
        if (!status) throw ReviewError(400, "bad status '" + value + "'");
      }
    }
    size_t offset = parse_size(req, "offset", 0);
    size_t limit = parse_size(req, "limit", 50);
    size_t total = 0;
    json items = json::array();
    for (const ReviewItem& item : q->List(status, offset, limit, &total)) {
      items.push_back(ItemJson(item));
    }
    send(res, 200,
         {{"total", total}, {"offset", offset}, {"limit", limit},
          {"items", items}});
  }));
  svr.Get(R"(/pairs/(\d+))",
          guarded([=](const httplib::Request& req, httplib::Response& res) {
            int id = std::stoi(req.matches[1].str());
            send(res, 200, ItemJson(q->Get(id)));
          }));
  svr.Post(R"(/pairs/(\d+)/decision)",
           guarded([=](const httplib::Request& req, httplib::Response& res) {
             int id = std::stoi(req.matches[1].str());
             q->Get(id);  // 404 before 400 for unknown pairs
             ReviewDecision decision = ReviewQueue::ParseDecision(req.body);
             send(res, 200, ItemJson(q->Decide(id, decision)));
           }));
  svr.Get("/metrics",
          guarded([=](const httplib::Request&, httplib::Response& res) {
            res.status = 200;
            res.set_content(q->MetricsJson(), "application/json");
          }));
  if (!static_dir.empty() && std::filesystem::is_directory(static_dir)) {
    svr.set_mount_point("/", static_dir);
  }
}

ReviewServer::~ReviewServer() { Stop(); }

int ReviewServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::kIoError, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void ReviewServer::Serve() { impl_->server.listen_after_bind(); }

void ReviewServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace namelink

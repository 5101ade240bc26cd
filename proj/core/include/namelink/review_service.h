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

#ifndef NAMELINK_REVIEW_SERVICE_H_
#define NAMELINK_REVIEW_SERVICE_H_

#include <cstddef>
#include <fstream>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "namelink/dataset_io.h"
#include "namelink/match_engine.h"

namespace namelink {

enum class ReviewStatus { kPending, kAccepted, kRejected };

std::string_view ReviewStatusName(ReviewStatus status);
std::optional<ReviewStatus> ParseReviewStatus(std::string_view text);

struct ReviewItem {
  int id = 0;
  MatchDecision decision;
  ReviewStatus status = ReviewStatus::kPending;
  std::vector<std::string> accepted;
  std::string decided_by;
  std::string decided_at;
};

struct ReviewDecision {
  bool reject = false;
  std::vector<std::string> accept;
  std::string reviewer;
};

// Failure of a queue request, carrying the HTTP status that reports it.
class ReviewError : public std::runtime_error {
 public:
  ReviewError(int status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// Possible-match decisions awaiting clerical review. Each decision is
// appended to a JSON-lines journal before it takes effect, and the journal
// is replayed on construction. Readers run concurrently; decisions are
// serialized.
class ReviewQueue {
 public:
  // Items are the possible matches of `results`, numbered from 1 in order.
  // `labels` are expert labels known beforehand; review decisions override
  // them. Throws kMalformedData for a journal that does not fit the queue
  // and kIoError when the journal cannot be opened.
  ReviewQueue(std::vector<MatchDecision> results, ExpertLabels labels = {},
              std::string journal_path = "");

  // Items with `status` (all when unset) in id order. *total receives the
  // count before paging.
  std::vector<ReviewItem> List(std::optional<ReviewStatus> status,
                               size_t offset, size_t limit,
                               size_t* total = nullptr) const;

  // Throws ReviewError(404).
  ReviewItem Get(int id) const;

  // Throws ReviewError 404 for an unknown item, 409 when it was already
  // decided and 400 for an empty, contradictory or foreign accept list.
  ReviewItem Decide(int id, const ReviewDecision& decision,
                    std::string decided_at = "");

  // Metrics over every record with an expert label (file labels plus
  // review decisions), the number of unreviewed records and the pending
  // items by machine multiplicity. Independent of decision timestamps.
  std::string MetricsJson() const;

  size_t size() const { return items_.size(); }

  static std::string ItemToJson(const ReviewItem& item);
  // Parses {"accept": [ids]} or {"reject": true} with optional "reviewer".
  // Throws ReviewError(400).
  static ReviewDecision ParseDecision(std::string_view body);

 private:
  ReviewItem ApplyLocked(int id, const ReviewDecision& decision,
                         const std::string& decided_at);
  void Replay();

  std::vector<MatchDecision> results_;
  ExpertLabels labels_;
  std::vector<ReviewItem> items_;
  std::string journal_path_;
  std::ofstream journal_;
  mutable std::shared_mutex mutex_;
};

// HTTP front end for a ReviewQueue:
//   GET  /pairs?status=pending&offset=0&limit=50
//   GET  /pairs/{id}
//   POST /pairs/{id}/decision
//   GET  /metrics
// plus static files from `static_dir` when set.
class ReviewServer {
 public:
  explicit ReviewServer(ReviewQueue& queue, std::string static_dir = "");
  ~ReviewServer();
  ReviewServer(const ReviewServer&) = delete;
  ReviewServer& operator=(const ReviewServer&) = delete;

  // Returns the bound port; port 0 picks a free one. Throws kIoError.
  int Bind(const std::string& host, int port);
  // Serves until Stop(). Call after Bind.
  void Serve();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace namelink

#endif  // NAMELINK_REVIEW_SERVICE_H_

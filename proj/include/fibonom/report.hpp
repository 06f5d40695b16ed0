#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibonom {

// "recorded" marks an expected, documented deviation: the value is retained
// for reference but never counts as a failure.
enum class Status { pass, fail, recorded };

std::string_view status_name(Status s);

using Params = std::vector<std::pair<std::string, std::string>>;

struct ReportEntry {
  std::string identity;
  Params params;
  std::string lhs;
  std::string rhs;
  Status status = Status::pass;
};

inline ReportEntry make_entry(std::string identity, Params params,
                              std::string lhs, std::string rhs,
                              Status status) {
  return ReportEntry{std::move(identity), std::move(params), std::move(lhs),
                     std::move(rhs), status};
}

// pass iff the two sides agree byte-for-byte.
inline ReportEntry check_entry(std::string identity, Params params,
                               std::string lhs, std::string rhs) {
  Status s = (lhs == rhs) ? Status::pass : Status::fail;
  return make_entry(std::move(identity), std::move(params), std::move(lhs),
                    std::move(rhs), s);
}

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t recorded = 0;
};

class Report {
 public:
  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void add(std::vector<ReportEntry> es) {
    for (auto& e : es) entries_.push_back(std::move(e));
  }

  // Deterministic order: (identity, params, lhs); numeric-aware so that
  // n=2 sorts before n=10.
  void normalize();

  const std::vector<ReportEntry>& entries() const { return entries_; }
  ReportSummary summary() const;
  bool ok() const { return summary().fail == 0; }

  std::string to_json() const;
  std::string to_text() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace fibonom

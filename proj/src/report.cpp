#include "fibonom/report.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "fibonom/version.hpp"
#include "json.hpp"

namespace fibonom {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::recorded:
      return "recorded-discrepancy";
  }
  return "unknown";
}

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Numeric-aware value comparison: integers by magnitude, everything else
// lexicographic. Only used for ordering, so it just needs to be total.
int compare_value(const std::string& a, const std::string& b) {
  if (is_plain_integer(a) && is_plain_integer(b)) {
    bool na = a[0] == '-', nb = b[0] == '-';
    if (na != nb) return na ? -1 : 1;
    const std::string da = na ? a.substr(1) : a;
    const std::string db = nb ? b.substr(1) : b;
    int mag;
    if (da.size() != db.size()) {
      mag = da.size() < db.size() ? -1 : 1;
    } else {
      mag = da.compare(db);
      mag = (mag < 0) ? -1 : (mag > 0 ? 1 : 0);
    }
    return na ? -mag : mag;
  }
  int c = a.compare(b);
  return (c < 0) ? -1 : (c > 0 ? 1 : 0);
}

bool entry_less(const ReportEntry& x, const ReportEntry& y) {
  if (x.identity != y.identity) return x.identity < y.identity;
  const std::size_t n = std::min(x.params.size(), y.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.params[i].first != y.params[i].first)
      return x.params[i].first < y.params[i].first;
    int c = compare_value(x.params[i].second, y.params[i].second);
    if (c != 0) return c < 0;
  }
  if (x.params.size() != y.params.size())
    return x.params.size() < y.params.size();
  return x.lhs < y.lhs;
}

}  // namespace

void Report::normalize() {
  std::stable_sort(entries_.begin(), entries_.end(), entry_less);
}

ReportSummary Report::summary() const {
  ReportSummary s;
  for (const auto& e : entries_) {
    switch (e.status) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::recorded:
        ++s.recorded;
        break;
    }
  }
  return s;
}

std::string Report::to_json() const {
  // All numeric values are emitted as strings: Fibonomial coefficients
  // overflow 64-bit integers long before the default ranges end.
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  const auto s = summary();
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"recorded", s.recorded}};
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json je;
    je["identity"] = e.identity;
    nlohmann::ordered_json jp = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.params) jp[k] = v;
    je["params"] = jp;
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    je["status"] = std::string(status_name(e.status));
    doc["entries"].push_back(je);
  }
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  // Per-identity tallies, then totals. No timestamps: identical invocations
  // must produce identical bytes.
  std::map<std::string, ReportSummary> by_identity;
  for (const auto& e : entries_) {
    auto& s = by_identity[e.identity];
    switch (e.status) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::recorded:
        ++s.recorded;
        break;
    }
  }
  std::ostringstream out;
  for (const auto& [name, s] : by_identity) {
    out << name << ": " << (s.pass + s.fail + s.recorded) << " cases, "
        << s.pass << " pass, " << s.fail << " fail, " << s.recorded
        << " recorded\n";
    if (s.fail > 0) {
      for (const auto& e : entries_) {
        if (e.identity != name || e.status != Status::fail) continue;
        out << "  FAIL";
        for (const auto& [k, v] : e.params) out << " " << k << "=" << v;
        out << ": lhs=" << e.lhs << " rhs=" << e.rhs << "\n";
      }
    }
  }
  const auto s = summary();
  out << "total: pass=" << s.pass << " fail=" << s.fail
      << " recorded=" << s.recorded << "\n";
  out << "result: " << (s.fail == 0 ? "OK" : "FAIL") << "\n";
  return out.str();
}

}  // namespace fibonom

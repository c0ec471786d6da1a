#pragma once

// Registry of checkable statements about minimum sumset sizes and critical
// numbers, each paired with an exhaustive checker over a parameter grid.
// Runs append one JSON record per parameter point to a line-oriented stream.

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumlab/group.hpp"
#include "sumlab/search.hpp"

namespace sumlab {

using Json = nlohmann::ordered_json;

enum class ClaimKind { theorem, conjecture, bound, inverse };
enum class PointStatus { match, discrepancy, refused, undefined };

std::string_view to_string(ClaimKind kind);
std::string_view to_string(PointStatus status);
PointStatus parse_point_status(std::string_view text);

/// Overrides for a claim's default parameter grid.
struct RangeSpec {
  std::optional<int> min_order;
  std::optional<int> max_order;
  std::optional<int> max_h;
  std::optional<int> primes_to;
};

struct ClaimPoint {
  GroupSpec group;
  std::optional<int> m;
  Json h;  // integer, "N0", "N", "k,l" or null
  int h_value = 0;
  int k = 0;
  int l = 0;
};

struct ClaimOutcome {
  Json expected;
  Json observed;
  PointStatus status = PointStatus::match;
  std::optional<std::string> witness;
};

struct ClaimRecord {
  std::string claim_id;
  std::string group;
  std::optional<int> m;
  Json h;
  Json expected;
  Json observed;
  PointStatus status = PointStatus::match;
  std::optional<std::string> witness;
  double elapsed_ms = 0;

  /// Fields in the fixed order claim_id, group, m, h, expected, observed,
  /// status, witness, elapsed_ms.
  Json to_json() const;
  /// Throws std::invalid_argument on missing or mistyped fields.
  static ClaimRecord from_json(const Json& j);
  /// Identifies the parameter point: claim, group, m and h.
  std::string key() const;
};

struct Claim {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::theorem;
  bool proven = false;  // a discrepancy is an implementation bug
  std::string domain;
  std::function<std::vector<ClaimPoint>(const RangeSpec&)> points;
  std::function<ClaimOutcome(const ClaimPoint&, const SearchLimits&)> check;
};

const std::vector<Claim>& claim_registry();
/// nullptr when the id is not registered.
const Claim* find_claim(std::string_view id);

/// A proven claim disagreed with the search.
class TheoremFailure : public std::runtime_error {
 public:
  explicit TheoremFailure(ClaimRecord record);
  const ClaimRecord& record() const { return record_; }

 private:
  ClaimRecord record_;
};

struct RunOptions {
  RangeSpec range;
  unsigned jobs = 1;
  SearchLimits limits;
  /// Keys of points to skip (see completed_points).
  std::set<std::string> skip;
  /// Receives one progress line per finished point when set.
  std::ostream* progress = nullptr;
};

struct RunSummary {
  std::size_t points = 0;
  std::size_t skipped = 0;
  std::size_t match = 0;
  std::size_t discrepancy = 0;
  std::size_t refused = 0;
  std::size_t undefined = 0;
};

/// Evaluates every point of the grid and writes records to sink in grid
/// order, whatever the completion order. Throws TheoremFailure after the
/// offending record has been written.
RunSummary run_claim(const Claim& claim, const RunOptions& options, std::ostream& sink);

/// The points of a claim's grid under the given overrides.
std::vector<ClaimPoint> claim_points(const Claim& claim, const RangeSpec& range);
ClaimRecord evaluate_point(const Claim& claim, const ClaimPoint& point, const SearchLimits& limits);

/// Keys of records already in a stream whose status is not refused.
/// Throws SummaryError on malformed lines.
std::set<std::string> completed_points(std::istream& stream);

class SummaryError : public std::runtime_error {
 public:
  SummaryError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads every record of a stream; later records replace earlier ones with the same key.
std::vector<ClaimRecord> read_records(std::istream& stream);

/// CSV with header claim,group_order,points,match,discrepancy,refused,undefined,max_gap;
/// one row per (claim, group order), sorted by claim id then order.
std::string summarize(std::istream& stream);

}  // namespace sumlab

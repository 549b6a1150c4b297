#pragma once

// Identity audit: a fixed registry of claims about Euler polynomials and DC
// sums, each evaluated exactly on both sides over integer parameter grids.
//
// Printed and corrected forms of a claim are separate checks. A tuple that
// violates a check's hypotheses produces a skipped result rather than a
// failure, so grids can stay rectangular.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcsum/rational.hpp"

namespace dcsum::audit {

class UnknownCheckError : public std::invalid_argument {
 public:
  explicit UnknownCheckError(const std::string& id)
      : std::invalid_argument("unknown check id: " + id) {}
};

// Named integer tuple; order follows the owning check's schema.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, std::int64_t>> values)
      : values_(values) {}

  // Throws PreconditionError when the name is absent.
  std::int64_t at(std::string_view name) const;
  bool contains(std::string_view name) const;
  void set(std::string name, std::int64_t value);

  const std::vector<std::pair<std::string, std::int64_t>>& values() const { return values_; }

  friend bool operator==(const Params&, const Params&) = default;
  // Lexicographic by value, then by name.
  friend bool operator<(const Params& a, const Params& b);

 private:
  std::vector<std::pair<std::string, std::int64_t>> values_;
};

struct IdentityCheck {
  std::string id;
  std::vector<std::string> params;  // schema, in enumeration order
  std::string claim;                // one-line statement of lhs = rhs
  // Returns the violated hypothesis, or nullopt when the tuple is admissible.
  std::function<std::optional<std::string>(const Params&)> hypotheses;
  std::function<Rational(const Params&)> lhs;
  std::function<Rational(const Params&)> rhs;
};

// Registry sorted by id.
const std::vector<IdentityCheck>& registry();
const IdentityCheck* find_check(std::string_view id);
std::vector<std::string> registry_ids();

struct CheckResult {
  std::string id;
  Params params;
  Rational lhs;
  Rational rhs;
  Rational residual;  // lhs - rhs
  bool holds = false;
  bool skipped = false;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Throws UnknownCheckError for an unregistered id and PreconditionError when
// a schema parameter is missing. Hypothesis violations give skipped = true.
CheckResult run_check(std::string_view id, const Params& params);

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;  // inclusive; lo > hi is empty

  friend bool operator==(const Range&, const Range&) = default;
};

// Per-parameter ranges. odd_only keeps odd p, h, k, m; coprime_only keeps
// gcd(h,k) = 1 for checks that take both.
struct ParamGrid {
  Range p{1, 7};
  Range h{1, 15};
  Range k{1, 15};
  Range n{1, 20};
  Range l{0, 10};
  Range m{1, 15};
  Range s{2, 10};
  bool odd_only = false;
  bool coprime_only = false;

  const Range& range(std::string_view name) const;
  Range& range(std::string_view name);

  friend bool operator==(const ParamGrid&, const ParamGrid&) = default;
};

// Names accepted by ParamGrid::range, in CSV column order.
inline constexpr std::string_view kParamNames[] = {"p", "h", "k", "n", "l", "m", "s"};

// Grid tuples for one check, in lexicographic order, after grid filters.
std::vector<Params> enumerate(const IdentityCheck& check, const ParamGrid& grid);

struct Tally {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skip = 0;

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct AuditReport {
  std::vector<std::string> checks;  // sorted, unique
  ParamGrid grid;
  std::vector<CheckResult> results;  // sorted by (id, params)
  std::map<std::string, Tally> summary;

  bool all_hold() const;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

struct SweepOptions {
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

// Evaluates every (id, tuple) pair. Output is independent of thread count.
AuditReport sweep(std::span<const std::string> ids, const ParamGrid& grid,
                  SweepOptions options = {});

}  // namespace dcsum::audit

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hvhom/algebra.hpp"
#include "hvhom/scalar.hpp"

namespace hvhom {

/// A grid point: named coordinates in enumeration order. Generator
/// coordinates are stored as a kind field plus an index field so that the
/// machine-readable payload only carries integers and short tags.
class Point {
 public:
  using Value = std::variant<Index, std::string>;

  Point& index(std::string name, Index value);
  /// Adds `<kind_name>` = "L"/"I"/... and `<index_name>` = index.
  Point& generator(const std::string& kind_name, const std::string& index_name,
                   const Generator& g);

  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
  const std::vector<Index>& key() const noexcept { return key_; }

  friend bool operator<(const Point& x, const Point& y) { return x.key_ < y.key_; }
  friend bool operator==(const Point& x, const Point& y) { return x.fields_ == y.fields_; }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
  std::vector<Index> key_;  // lexicographic sort key
};

struct Counterexample {
  Point point;
  std::string lhs;
  std::string rhs;
};

/// Outcome of an exhaustive window check.
///
/// status is derived: the report fails exactly when at least one grid point
/// failed, and then `counterexamples` holds the first `limit` failures in
/// point order while `failures` holds the total.
struct CheckReport {
  std::string suite;
  std::map<std::string, std::pair<Index, Index>> window;
  std::map<std::string, std::string> params;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const noexcept { return failures == 0; }
  std::string status() const { return passed() ? "pass" : "fail"; }
};

struct AuditEntry {
  std::string component;
  std::string printed;
  std::string derived;
  bool matches = true;

  std::string verdict() const { return matches ? "match" : "mismatch"; }
};

/// Componentwise comparison of printed formulas against machine-derived
/// values, with the check outcomes that back the comparison.
struct AuditReport {
  std::string subject;
  std::map<std::string, std::string> params;
  std::vector<AuditEntry> entries;
  std::vector<CheckReport> checks;

  std::vector<std::string> mismatched_components() const;
  bool identical() const { return mismatched_components().empty(); }
};

/// Canonical JSON: sorted keys, compact separators, scalars as grammar
/// strings, no floating point. Identical reports give identical bytes.
std::string to_canonical_json(const CheckReport& report);
std::string to_canonical_json(const AuditReport& report);

/// Writes the canonical JSON (plus a trailing newline) to `path` and
/// returns the bytes written. Throws IoError when the file cannot be written.
std::string emit_report(const CheckReport& report, const std::string& path);
std::string emit_report(const AuditReport& report, const std::string& path);

}  // namespace hvhom

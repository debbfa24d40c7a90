#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfcqt/cqt.hpp"

namespace hopfcqt {

struct Expectation {
  std::string check;
  Status status = Status::Pass;
  std::string citation;
  std::vector<std::string> failing;  // necessary_battery: sub-checks expected to fail, headline first
};

struct CatalogEntry {
  std::string id;
  std::string description;
  ContextPtr ctx;
  BatteryOptions battery;
  std::function<RForm(std::size_t maxlen)> R;  // candidate structure, when the entry has one
  std::vector<Expectation> expected;
};

// Checks understood by run_entry.
const std::vector<std::string>& catalog_checks();
const std::vector<std::string>& catalog_ids();
const CatalogEntry& catalog_entry(const std::string& id);  // UnknownEntry

// One aggregated report for a named check; sub-reports are kept in `parts`.
struct CheckOutcome {
  CheckReport report;
  std::vector<CheckReport> parts;
};
CheckOutcome run_check(const CatalogEntry& e, const std::string& check, std::size_t maxlen = 4);

struct EntryCheckResult {
  CheckOutcome outcome;
  std::optional<Expectation> expected;  // none recorded for this check
  bool matches = true;
};
struct EntryResult {
  std::string id;
  std::vector<EntryCheckResult> checks;
  bool all_match() const;
};
// Empty `checks` runs every check with a recorded expectation.
EntryResult run_entry(const std::string& id, const std::vector<std::string>& checks = {}, std::size_t maxlen = 4);
EntryResult run_entry(const CatalogEntry& e, const std::vector<std::string>& checks = {}, std::size_t maxlen = 4);

CheckReport aggregate(const std::string& name, const std::vector<CheckReport>& parts);

}  // namespace hopfcqt

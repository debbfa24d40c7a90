#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hopfcqt {

enum class Status { Pass, Fail, OutOfWindow, NotApplicable };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Witness {
  std::vector<std::pair<std::string, std::string>> fields;
  Witness& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string get(const std::string& key) const;
  std::string to_string() const;
};

struct CheckReport {
  std::string check;
  Status status = Status::Pass;
  std::size_t instances = 0;      // instances evaluated
  std::size_t out_of_window = 0;  // instances skipped because a key left the window
  std::optional<Witness> witness;
  std::string citation;
  std::string note;

  bool passed() const { return status == Status::Pass; }
  // all evaluated instances held (possibly with skipped out-of-window ones)
  bool holds_in_window() const { return status == Status::Pass || status == Status::OutOfWindow; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

inline CheckReport make_report(std::string check) {
  CheckReport r;
  r.check = std::move(check);
  return r;
}

}  // namespace hopfcqt

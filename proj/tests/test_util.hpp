#pragma once

#include <string>
#include <vector>

#include "hopfcqt/report.hpp"

inline const hopfcqt::CheckReport* find_report(const std::vector<hopfcqt::CheckReport>& rs, const std::string& n) {
  for (const auto& r : rs)
    if (r.check == n) return &r;
  return nullptr;
}

inline std::string dump(const std::vector<hopfcqt::CheckReport>& rs) {
  std::string s;
  for (const auto& r : rs) s += r.to_text() + "\n";
  return s;
}

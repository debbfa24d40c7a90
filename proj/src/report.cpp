#include "hopfcqt/report.hpp"

#include "hopfcqt/error.hpp"

namespace hopfcqt {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::OutOfWindow:
      return "out-of-window";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "out-of-window") return Status::OutOfWindow;
  if (s == "not-applicable") return Status::NotApplicable;
  throw SchemaError("status", "unknown status '" + s + "'");
}

std::string Witness::get(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return {};
}

std::string Witness::to_string() const {
  std::string s;
  for (const auto& [k, v] : fields) {
    if (!s.empty()) s += ", ";
    s += k + "=" + v;
  }
  return s;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j = {{"check", check}, {"status", hopfcqt::to_string(status)}};
  if (instances) j["instances"] = instances;
  if (out_of_window) j["out_of_window"] = out_of_window;
  if (witness) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, v] : witness->fields) w[k] = v;
    j["witness"] = w;
  }
  if (!citation.empty()) j["citation"] = citation;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string CheckReport::to_text() const {
  std::string s = check + ": " + hopfcqt::to_string(status);
  if (instances) s += " (" + std::to_string(instances) + " instances";
  if (instances && out_of_window) s += ", " + std::to_string(out_of_window) + " out of window";
  if (instances) s += ")";
  if (witness) s += "\n  witness: " + witness->to_string();
  if (!note.empty()) s += "\n  note: " + note;
  if (!citation.empty()) s += "\n  source: " + citation;
  return s;
}

}  // namespace hopfcqt

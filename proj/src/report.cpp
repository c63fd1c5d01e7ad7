#include "finmon/report.hpp"

#include <sstream>

#include <json.hpp>

namespace finmon {

void Report::pass(std::string check, std::string witness, std::string bound) {
  checks.push_back({std::move(check), "pass", std::move(witness), std::move(bound)});
}

void Report::fail(std::string check, std::string witness, std::string bound) {
  checks.push_back({std::move(check), "fail", std::move(witness), std::move(bound)});
}

void Report::info(std::string check, std::string witness, std::string bound) {
  checks.push_back({std::move(check), "info", std::move(witness), std::move(bound)});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t Report::pass_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (c.verdict == "pass");
  return n;
}

std::size_t Report::fail_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (c.verdict == "fail");
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "subject: " << subject << "\n";
  for (const auto& c : checks) {
    out << "  [" << c.verdict << "] " << c.check;
    if (!c.witness.empty()) out << " | " << c.witness;
    if (!c.bound.empty()) out << " (" << c.bound << ")";
    out << "\n";
  }
  out << "summary: " << pass_count() << " passed, " << fail_count() << " failed\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["subject"] = subject;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["check"] = c.check;
    item["verdict"] = c.verdict;
    item["witness"] = c.witness;
    item["bound"] = c.bound;
    doc["checks"].push_back(std::move(item));
  }
  doc["summary"]["pass"] = pass_count();
  doc["summary"]["fail"] = fail_count();
  return doc.dump(2);
}

}  // namespace finmon

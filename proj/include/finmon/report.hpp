#pragma once

#include <string>
#include <vector>

namespace finmon {

// One verified property. Verdicts are "pass", "fail" or "info"; failed
// checks always carry a replayable witness, bounded verdicts carry the
// bound label they were computed under.
struct CheckResult {
  std::string check;
  std::string verdict;
  std::string witness;
  std::string bound;
};

struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  void pass(std::string check, std::string witness = "", std::string bound = "");
  void fail(std::string check, std::string witness, std::string bound = "");
  void info(std::string check, std::string witness = "", std::string bound = "");
  void merge(const Report& other);

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  bool ok() const { return fail_count() == 0; }

  std::string to_text() const;
  std::string to_json() const;  // canonical structured form
};

}  // namespace finmon

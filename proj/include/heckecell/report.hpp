#pragma once

#include <string>
#include <vector>

namespace heckecell {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // first offending tuple on failure
};

/// Ordered list of named checks.
class Report {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
  }
  bool all_passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

 private:
  std::vector<CheckResult> checks_;
};

/// Collects the first failure of a family of checks.
class Witness {
 public:
  void fail(const std::string& what) {
    if (ok_) first_ = what;
    ok_ = false;
  }
  bool ok() const { return ok_; }
  const std::string& first() const { return first_; }
  void into(Report& r, std::string name) const { r.add(std::move(name), ok_, first_); }

 private:
  bool ok_ = true;
  std::string first_;
};

}  // namespace heckecell

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dl {

enum class Scale { kDesk, kSmoke };

struct SuiteOptions {
  std::uint64_t seed = 7;
  Scale scale = Scale::kDesk;
};

struct SuiteFailure {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string name;
  int criterion = 0;
  std::string title;
  std::int64_t cases = 0;
  std::int64_t failure_count = 0;
  std::vector<SuiteFailure> failures;  // the first few, for diagnosis
  std::vector<std::string> notes;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_time() const { return seconds <= limit_seconds; }
  bool passed() const { return failure_count == 0 && within_time(); }
};

/// Collects checks for one suite run.
class SuiteContext {
 public:
  explicit SuiteContext(SuiteReport& report) : report_(report) {}

  /// Counts one case.  On failure `describe` is called for the
  /// {inputs, expected, actual} record, so passing cases cost no formatting.
  template <typename Describe>
  bool check(bool ok, Describe&& describe) {
    ++report_.cases;
    if (!ok) fail(describe());
    return ok;
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  void fail(SuiteFailure failure) {
    ++report_.failure_count;
    if (report_.failures.size() < kKeptFailures) report_.failures.push_back(std::move(failure));
  }

  static constexpr std::size_t kKeptFailures = 20;
  SuiteReport& report_;
};

struct Suite {
  std::string name;
  int criterion;
  std::string title;
  double limit_seconds;
  std::function<void(SuiteContext&, const SuiteOptions&)> body;
};

/// Every suite, ordered by name.
const std::vector<Suite>& all_suites();

SuiteReport run_suite(const Suite& suite, const SuiteOptions& options);

/// Runs "all" or one named suite; reports sorted by suite name.  Throws on
/// an unknown name.
std::vector<SuiteReport> run_suites(const std::string& which, const SuiteOptions& options);

}  // namespace dl

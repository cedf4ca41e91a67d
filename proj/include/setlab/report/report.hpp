#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace setlab::report {

inline constexpr const char* kSchema = "setlab-report/1";

/// pass is empty for a check that could not be evaluated on its input.
struct Outcome {
  std::optional<bool> pass;
  nlohmann::json detail = nlohmann::json::object();
};

struct CheckRecord {
  std::string id;
  std::string anchor;
  std::optional<bool> pass;
  nlohmann::json detail;
  double runtime_ms = 0.0;
};

class Report {
public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  /// Throws std::logic_error on a duplicate id.
  void add(std::string id, std::string anchor, Outcome outcome, double runtime_ms = 0.0);
  /// Times fn; an exception escaping fn becomes a failed check carrying the message.
  void run(std::string id, std::string anchor, const std::function<Outcome()>& fn);

  [[nodiscard]] const std::string& command() const noexcept { return command_; }
  [[nodiscard]] const std::vector<CheckRecord>& checks() const noexcept { return checks_; }
  [[nodiscard]] const CheckRecord& at(const std::string& id) const;
  /// No check failed. Unevaluated checks do not count as failures.
  [[nodiscard]] bool all_pass() const;

  /// Checks ordered by id. runtime_ms only appears when timing is set, so
  /// the default output is byte-stable.
  [[nodiscard]] nlohmann::json to_json(bool timing = false) const;
  [[nodiscard]] std::string to_text(bool timing = false) const;

private:
  [[nodiscard]] std::vector<const CheckRecord*> sorted() const;

  std::string command_;
  std::vector<CheckRecord> checks_;
};

} // namespace setlab::report

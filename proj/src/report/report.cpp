#include "setlab/report/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace setlab::report {

void Report::add(std::string id, std::string anchor, Outcome outcome, double runtime_ms) {
  const bool dup = std::any_of(checks_.begin(), checks_.end(), [&](const CheckRecord& c) { return c.id == id; });
  if (dup) throw std::logic_error("check '" + id + "' registered twice");
  checks_.push_back({std::move(id), std::move(anchor), outcome.pass, std::move(outcome.detail), runtime_ms});
}

void Report::run(std::string id, std::string anchor, const std::function<Outcome()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {false, {{"error", e.what()}}};
  }
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
  add(std::move(id), std::move(anchor), std::move(out), dt.count());
}

const CheckRecord& Report::at(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no check '" + id + "'");
}

bool Report::all_pass() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.pass == false; });
}

std::vector<const CheckRecord*> Report::sorted() const {
  std::vector<const CheckRecord*> out;
  for (const auto& c : checks_) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](const CheckRecord* a, const CheckRecord* b) { return a->id < b->id; });
  return out;
}

nlohmann::json Report::to_json(bool timing) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord* c : sorted()) {
    nlohmann::json j{{"id", c->id}, {"anchor", c->anchor}, {"detail", c->detail}};
    j["pass"] = c->pass ? nlohmann::json(*c->pass) : nlohmann::json(nullptr);
    if (!c->pass) j["status"] = "not evaluated";
    if (timing) j["runtime_ms"] = c->runtime_ms;
    checks.push_back(std::move(j));
  }
  return {{"schema", kSchema}, {"command", command_}, {"pass", all_pass()}, {"checks", checks}};
}

std::string Report::to_text(bool timing) const {
  std::string out;
  std::size_t failed = 0;
  for (const CheckRecord* c : sorted()) {
    const char* tag = !c->pass ? "SKIP" : (*c->pass ? "PASS" : "FAIL");
    if (c->pass == false) ++failed;
    out += std::string(tag) + "  " + c->id;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.1f ms)", c->runtime_ms);
      out += buf;
    }
    out += "\n      " + c->anchor + "\n";
    if (c->pass != true) out += "      " + c->detail.dump() + "\n";
  }
  out += command_ + ": " + std::to_string(checks_.size()) + " checks, " + std::to_string(failed) + " failed\n";
  return out;
}

} // namespace setlab::report

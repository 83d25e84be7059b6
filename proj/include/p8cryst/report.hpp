#pragma once

// Verification reports shared by every suite and by the CLI.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace p8 {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);
// fail dominates inconclusive, which dominates pass.
Verdict combine(Verdict a, Verdict b);
inline Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

struct Check {
  std::string claim_id;
  std::string anchor;  // short description of the claim being checked
  Verdict verdict = Verdict::fail;
  nlohmann::json witness;
};

inline constexpr const char* kReportSchema = "1";

class Report {
 public:
  Report() = default;
  Report(std::string suite, std::string subject, std::string character = {})
      : suite_(std::move(suite)), subject_(std::move(subject)), character_(std::move(character)) {}

  const std::string& suite() const noexcept { return suite_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& character() const noexcept { return character_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  nlohmann::json& resolved_choices() noexcept { return resolved_; }
  const nlohmann::json& resolved_choices() const noexcept { return resolved_; }

  Check& add(std::string claim_id, std::string anchor, Verdict verdict, nlohmann::json witness = {});
  Check& add(std::string claim_id, std::string anchor, bool ok, nlohmann::json witness = {}) {
    return add(std::move(claim_id), std::move(anchor), verdict_of(ok), std::move(witness));
  }
  void append(const Report& other, const std::string& prefix = {});

  const Check* find(const std::string& claim_id) const;
  Verdict overall() const;
  std::size_t count(Verdict v) const;

  void set_seconds(double s) { seconds_ = s; }
  std::optional<double> seconds() const { return seconds_; }

  nlohmann::json to_json(bool with_timing = false) const;
  static Report from_json(const nlohmann::json& j);
  std::string to_text() const;

 private:
  std::string suite_;
  std::string subject_;
  std::string character_;
  std::vector<Check> checks_;
  nlohmann::json resolved_ = nlohmann::json::object();
  std::optional<double> seconds_;
};

Verdict overall(const std::vector<Report>& reports);
nlohmann::json to_json(const std::vector<Report>& reports, bool with_timing = false);

}  // namespace p8

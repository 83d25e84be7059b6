#include "p8cryst/report.hpp"

#include <sstream>
#include <stdexcept>

namespace p8 {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

Check& Report::add(std::string claim_id, std::string anchor, Verdict verdict, nlohmann::json witness) {
  checks_.push_back({std::move(claim_id), std::move(anchor), verdict, std::move(witness)});
  return checks_.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    copy.claim_id = prefix + copy.claim_id;
    checks_.push_back(std::move(copy));
  }
  for (auto it = other.resolved_.begin(); it != other.resolved_.end(); ++it)
    resolved_[prefix + it.key()] = it.value();
}

const Check* Report::find(const std::string& claim_id) const {
  for (const auto& c : checks_)
    if (c.claim_id == claim_id) return &c;
  return nullptr;
}

Verdict Report::overall() const {
  Verdict v = Verdict::pass;
  for (const auto& c : checks_) v = combine(v, c.verdict);
  return v;
}

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (c.verdict == v) ++n;
  return n;
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite_;
  j["case"] = subject_;
  j["character"] = character_;
  j["verdict"] = to_string(overall());
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json cj;
    cj["claim_id"] = c.claim_id;
    cj["anchor"] = c.anchor;
    cj["verdict"] = to_string(c.verdict);
    cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["resolved_choices"] = resolved_;
  if (with_timing && seconds_) j["timing_seconds"] = *seconds_;
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kReportSchema) throw std::invalid_argument("unsupported report schema");
  Report r(j.at("suite").get<std::string>(), j.at("case").get<std::string>(),
           j.value("character", std::string{}));
  for (const auto& c : j.at("checks"))
    r.add(c.at("claim_id").get<std::string>(), c.at("anchor").get<std::string>(),
          verdict_from_string(c.at("verdict").get<std::string>()), c.value("witness", nlohmann::json{}));
  r.resolved_ = j.value("resolved_choices", nlohmann::json::object());
  if (j.contains("timing_seconds")) r.seconds_ = j["timing_seconds"].get<double>();
  return r;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << suite_ << " " << subject_;
  if (!character_.empty()) os << " [chi=" << character_ << "]";
  os << ": " << to_string(overall()) << " (" << count(Verdict::pass) << "/" << checks_.size()
     << " checks pass)\n";
  for (const auto& c : checks_) {
    os << "  " << (c.verdict == Verdict::pass ? "ok  " : c.verdict == Verdict::fail ? "FAIL" : "??  ")
       << " " << c.claim_id << " - " << c.anchor;
    if (!c.witness.is_null()) {
      std::string w = c.witness.dump();
      if (w.size() > 160) w = w.substr(0, 157) + "...";
      os << "  " << w;
    }
    os << "\n";
  }
  if (!resolved_.empty()) os << "  resolved: " << resolved_.dump() << "\n";
  return os.str();
}

Verdict overall(const std::vector<Report>& reports) {
  Verdict v = Verdict::pass;
  for (const auto& r : reports) v = combine(v, r.overall());
  return v;
}

nlohmann::json to_json(const std::vector<Report>& reports, bool with_timing) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["verdict"] = to_string(overall(reports));
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) j["reports"].push_back(r.to_json(with_timing));
  return j;
}

}  // namespace p8

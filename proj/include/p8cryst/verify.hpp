#pragma once

// Verification suites behind the command-line front end.

#include <string>
#include <vector>

#include "p8cryst/affine.hpp"
#include "p8cryst/monodromy.hpp"
#include "p8cryst/report.hpp"

namespace p8 {

struct VerifyOptions {
  ChiChoice chi = ChiChoice::primary;
  bool both_characters = false;  // `verify all` covers chi and conj(chi)
  std::size_t max_words = 12;
  std::size_t max_group = 2000;
  bool timing = false;
};

CrystOptions cryst_options(const VerifyOptions& opt);

std::vector<Report> verify_table1_suite(const VerifyOptions& opt = {});
std::vector<Report> verify_pproj_suite(const VerifyOptions& opt = {});
// Throws UnknownName.
std::vector<Report> verify_diagram_suite(const std::string& name, const VerifyOptions& opt = {});
// Reference group name (its own checks plus every diagram assigned to it) or a diagram name.
std::vector<Report> verify_group_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<Report> verify_all(const VerifyOptions& opt = {});

// Exit status for a set of reports: 0 pass, 1 fail, 3 inconclusive.
int exit_code(const std::vector<Report>& reports);

nlohmann::json show_diagram(const std::string& name, ChiChoice chi);
nlohmann::json show_group(const std::string& name);

}  // namespace p8

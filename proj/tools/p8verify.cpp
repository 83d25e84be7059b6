#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "p8cryst/verify.hpp"

namespace {

constexpr int kUsage = 2;

int usage_error(const std::string& msg) {
  std::cerr << "p8verify: " << msg << "\n";
  return kUsage;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k < argc; ++k)
    if (std::strncmp(argv[k], "--seed-free=", 12) == 0) return usage_error("--seed-free takes no value");

  CLI::App app{"Exact verification of equivariant monodromy and crystallographic groups"};
  app.require_subcommand(1);
  std::string json_path, chi = "primary";
  std::size_t max_words = 12, max_group = 2000;
  bool seed_free = false, timing = false;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string target, name;
  verify->add_option("target", target, "all | table1 | pproj | diagram | group")
      ->required()
      ->check(CLI::IsMember({"all", "table1", "pproj", "diagram", "group"}));
  verify->add_option("name", name, "diagram or group name");

  auto* show = app.add_subcommand("show", "dump a reconciled dataset or reference group as JSON");
  std::string kind, show_name;
  show->add_option("kind", kind, "diagram | group")->required()->check(CLI::IsMember({"diagram", "group"}));
  show->add_option("name", show_name, "name")->required();

  for (auto* sub : {verify, show}) {
    sub->add_option("--json", json_path, "write JSON to this path ('-' for stdout)");
    sub->add_option("--chi", chi, "kernel character")->check(CLI::IsMember({"primary", "conj"}));
    sub->add_flag("--seed-free", seed_free, "no randomness is used anywhere; accepted for compatibility");
  }
  verify->add_option("--max-words", max_words, "word length bound for the fullness check")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  verify->add_option("--max-group", max_group, "closure size limit")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "include per-case timing in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const p8::ChiChoice chi_choice = chi == "conj" ? p8::ChiChoice::conj : p8::ChiChoice::primary;
  try {
    if (show->parsed()) {
      const nlohmann::json j =
          kind == "diagram" ? p8::show_diagram(show_name, chi_choice) : p8::show_group(show_name);
      write_json(j, json_path);
      return 0;
    }

    p8::VerifyOptions opt;
    opt.chi = chi_choice;
    opt.max_words = max_words;
    opt.max_group = max_group;
    opt.timing = timing;
    std::vector<p8::Report> reports;
    if (target == "diagram" || target == "group") {
      if (name.empty()) return usage_error("verify " + target + " needs a name");
      reports = target == "diagram" ? p8::verify_diagram_suite(name, opt) : p8::verify_group_suite(name, opt);
    } else {
      if (!name.empty()) return usage_error("verify " + target + " takes no name");
      if (target == "all") reports = p8::verify_all(opt);
      if (target == "table1") reports = p8::verify_table1_suite(opt);
      if (target == "pproj") reports = p8::verify_pproj_suite(opt);
    }
    if (!json_path.empty()) write_json(p8::to_json(reports, timing), json_path);
    if (json_path != "-")
      for (const auto& r : reports) std::cout << r.to_text();
    if (json_path != "-") std::cout << "overall: " << p8::to_string(p8::overall(reports)) << "\n";
    return p8::exit_code(reports);
  } catch (const p8::UnknownName& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "p8verify: error: " << e.what() << "\n";
    return 1;
  }
}

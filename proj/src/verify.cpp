#include "p8cryst/verify.hpp"

#include <chrono>
#include <functional>

#include "p8cryst/classify.hpp"

namespace p8 {

namespace {

using Task = std::function<Report()>;

Report timed(const Task& t) {
  const auto start = std::chrono::steady_clock::now();
  Report r = t();
  r.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

// Independent cases run concurrently; output keeps task order.
std::vector<Report> run(const std::vector<Task>& tasks) {
  std::vector<Report> out(tasks.size());
#if defined(P8_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long k = 0; k < static_cast<long long>(tasks.size()); ++k) out[k] = timed(tasks[k]);
  return out;
}

std::vector<ChiChoice> characters(const VerifyOptions& opt) {
  if (opt.both_characters) return {ChiChoice::primary, ChiChoice::conj};
  return {opt.chi};
}

// Inside a fan-out the closure kernels run serially.
CrystOptions inner_options(const VerifyOptions& opt) {
  CrystOptions c = cryst_options(opt);
  c.exec = Exec::serial;
  return c;
}

}  // namespace

CrystOptions cryst_options(const VerifyOptions& opt) {
  CrystOptions c;
  c.word_bound = opt.max_words;
  c.max_group = opt.max_group;
  return c;
}

std::vector<Report> verify_table1_suite(const VerifyOptions&) { return run({[] { return verify_table1(); }}); }

std::vector<Report> verify_pproj_suite(const VerifyOptions&) { return run({[] { return verify_proj_rows(); }}); }

std::vector<Report> verify_diagram_suite(const std::string& name, const VerifyOptions& opt) {
  builtin_diagram(name);
  std::vector<Task> tasks;
  for (auto chi : characters(opt)) tasks.push_back([name, chi] { return verify_diagram(diagram_for(name, chi)); });
  return run(tasks);
}

std::vector<Report> verify_group_suite(const std::string& name, const VerifyOptions& opt) {
  std::vector<Task> tasks;
  const CrystOptions copt = inner_options(opt);
  bool is_diagram = false;
  for (const auto& d : builtin_diagrams()) is_diagram = is_diagram || d.name == name;
  if (is_diagram) {
    for (auto chi : characters(opt))
      tasks.push_back([name, chi, copt] { return verify_crystallographic(diagram_for(name, chi), copt); });
    return run(tasks);
  }
  reference_group(name);
  tasks.push_back([name, copt] { return verify_reference_group(name, copt); });
  for (const auto& d : builtin_diagrams()) {
    if (d.expected_group != name) continue;
    for (auto chi : characters(opt)) {
      const std::string dn = d.name;
      tasks.push_back([dn, chi, copt] { return verify_crystallographic(diagram_for(dn, chi), copt); });
    }
  }
  return run(tasks);
}

std::vector<Report> verify_all(const VerifyOptions& in) {
  VerifyOptions opt = in;
  opt.both_characters = true;
  const CrystOptions copt = inner_options(opt);
  std::vector<Task> tasks;
  tasks.push_back([] { return verify_table1(); });
  tasks.push_back([] { return verify_proj_rows(); });
  for (const auto& d : builtin_diagrams())
    for (auto chi : characters(opt)) {
      const std::string dn = d.name;
      tasks.push_back([dn, chi] { return verify_diagram(diagram_for(dn, chi)); });
    }
  for (const auto& g : reference_group_names()) tasks.push_back([g, copt] { return verify_reference_group(g, copt); });
  for (const auto& d : builtin_diagrams())
    for (auto chi : characters(opt)) {
      const std::string dn = d.name;
      tasks.push_back([dn, chi, copt] { return verify_crystallographic(diagram_for(dn, chi), copt); });
    }
  return run(tasks);
}

int exit_code(const std::vector<Report>& reports) {
  switch (overall(reports)) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::inconclusive:
      return 3;
  }
  return 1;
}

nlohmann::json show_diagram(const std::string& name, ChiChoice chi) {
  const DiagramSpec d = diagram_for(name, chi);
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["dataset"] = diagram_to_json(d);
  const ConcreteGram cg = reconcile(d);
  const Quotient q = quotient_basis(d, cg.gram);
  auto rows = [](const Matrix& m) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
      r.push_back(row);
    }
    return r;
  };
  j["gram"] = rows(cg.gram.matrix());
  j["resolved_choices"] = describe_choices(d, cg);
  j["quotient_gram"] = rows(q.gram.matrix());
  j["projection"] = rows(q.projection);
  j["operators"] = nlohmann::json::array();
  for (const auto& op : diagram_operators(d, q))
    j["operators"].push_back({{"root", op.root_id}, {"lambda", to_string(op.lambda)}, {"matrix", rows(op.matrix)}});
  const DualFrame f = DualFrame::build(q.gram, d.kernel_vector);
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : f.a) a.push_back(to_string(x));
  j["frame"] = {{"tau", f.tau}, {"a", a}, {"alpha0", to_string(f.alpha0)}, {"Q", rows(f.q.matrix())}};
  return j;
}

nlohmann::json show_group(const std::string& name) {
  const ReferenceGroup& g = reference_group(name);
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["name"] = g.name;
  j["dim"] = g.dim;
  j["order"] = g.literature_order;
  j["provenance"] = g.provenance;
  j["generators"] = nlohmann::json::array();
  for (std::size_t k = 0; k < g.generators.size(); ++k) {
    const Matrix& m = g.generators[k];
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
      r.push_back(row);
    }
    j["generators"].push_back({{"source", g.generator_sources[k]}, {"matrix", r}});
  }
  nlohmann::json root = nlohmann::json::array();
  for (const auto& x : g.designated_root) root.push_back(to_string(x));
  j["designated_root"] = root;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : g.lattice.basis()) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& x : v) b.push_back(to_string(x));
    basis.push_back(b);
  }
  j["lattice_basis"] = basis;
  return j;
}

}  // namespace p8

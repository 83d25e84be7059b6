#include "p8cryst/classify.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "p8cryst/data.hpp"

namespace p8 {

namespace {

const std::vector<CycloNum>& kernel_character_set() {
  static const std::vector<CycloNum> set = [] {
    const CycloNum w = root_of_unity(3, 1), i = root_of_unity(4, 1);
    return std::vector<CycloNum>{i, -i, w, -w, w.conj(), -w.conj()};
  }();
  return set;
}

std::vector<Monomial> parse_monomials(const nlohmann::json& arr) {
  std::vector<Monomial> out;
  for (const auto& m : arr) out.push_back(parse_monomial(m.get<std::string>()));
  return out;
}

MonomialBasis parse_basis(const nlohmann::json& arr) {
  MonomialBasis out;
  for (const auto& entry : arr) out.push_back(parse_monomials(entry));
  if (out.size() != 8) throw ClassifyError("local ring basis must have 8 entries");
  return out;
}

nlohmann::json monomial_names(const std::vector<Monomial>& ms) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : ms) j.push_back(to_string(m));
  return j;
}

// Equivalent monomials must carry equal characters under g.
bool alternates_consistent(const MonomialBasis& basis, const DiagonalSymmetry& g) {
  for (const auto& entry : basis)
    for (const auto& m : entry)
      if (monomial_character(m, g) != monomial_character(entry.front(), g)) return false;
  return true;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  std::size_t pos = 0;
  auto fail = [&] { throw ClassifyError("bad monomial '" + std::string(text) + "'"); };
  if (text == "1") return m;
  while (pos < text.size()) {
    const char v = text[pos++];
    int var = v == 'x' ? 0 : v == 'y' ? 1 : v == 'z' ? 2 : -1;
    if (var < 0) fail();
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
      e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        e = e * 10 + (text[pos++] - '0');
    }
    m.exp[var] += e;
    if (pos < text.size()) {
      if (text[pos] != '*') fail();
      ++pos;
      if (pos == text.size()) fail();
    }
  }
  return m;
}

std::string to_string(const Monomial& m) {
  std::string out;
  static const char names[] = {'x', 'y', 'z'};
  for (int k = 0; k < 3; ++k) {
    if (m.exp[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[k];
    if (m.exp[k] > 1) out += "^" + std::to_string(m.exp[k]);
  }
  return out.empty() ? "1" : out;
}

DiagonalSymmetry parse_symmetry(const std::vector<std::string>& kappas) {
  if (kappas.size() != 3) throw ClassifyError("a diagonal symmetry needs three entries");
  DiagonalSymmetry g{parse_cyclo(kappas[0]), parse_cyclo(kappas[1]), parse_cyclo(kappas[2])};
  for (const auto& k : g)
    if (root_of_unity_order(k) == 0) throw ClassifyError("symmetry entry " + to_string(k) + " is not a root of unity");
  return g;
}

DiagonalSymmetry inverse(const DiagonalSymmetry& g) { return {g[0].inverse(), g[1].inverse(), g[2].inverse()}; }

DiagonalSymmetry power(const DiagonalSymmetry& g, long k) { return {g[0].pow(k), g[1].pow(k), g[2].pow(k)}; }

CycloNum monomial_character(const Monomial& m, const DiagonalSymmetry& g) {
  return g[0].pow(m.exp[0]) * g[1].pow(m.exp[1]) * g[2].pow(m.exp[2]);
}

std::optional<CycloNum> try_equivariance_factor(const std::vector<Monomial>& f, const DiagonalSymmetry& g) {
  if (f.empty()) throw ClassifyError("empty polynomial");
  const CycloNum c = monomial_character(f.front(), g);
  for (const auto& m : f)
    if (monomial_character(m, g) != c) return std::nullopt;
  return c;
}

CycloNum equivariance_factor(const std::vector<Monomial>& f, const DiagonalSymmetry& g) {
  if (auto c = try_equivariance_factor(f, g)) return *c;
  throw ClassifyError("not equivariant");
}

int symmetry_order(const DiagonalSymmetry& g) {
  int order = 1;
  for (const auto& k : g) {
    const int o = root_of_unity_order(k);
    if (o == 0) throw ClassifyError("symmetry entry is not a root of unity");
    order = std::lcm(order, o);
  }
  return order;
}

std::vector<std::size_t> versal_indices(const SymmetryCase& c) {
  const CycloNum factor = equivariance_factor(c.f, c.g);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.basis.size(); ++k)
    if (monomial_character(c.basis[k].front(), c.g) == factor) out.push_back(k);
  return out;
}

std::vector<Monomial> versal_monomials(const SymmetryCase& c) {
  std::vector<Monomial> out;
  for (auto k : versal_indices(c)) out.push_back(c.basis[k].front());
  return out;
}

CycloNum form_character(const SymmetryCase& c) {
  return c.g[0] * c.g[1] * c.g[2] / equivariance_factor(c.f, c.g);
}

std::optional<std::pair<CycloNum, CycloNum>> kernel_characters(const SymmetryCase& c) {
  const CycloNum chi = form_character(c);
  const auto& set = kernel_character_set();
  if (std::find(set.begin(), set.end(), chi) == set.end()) return std::nullopt;
  return std::make_pair(chi, chi.conj());
}

bool is_smoothable(const SymmetryCase& c) {
  const CycloNum factor = equivariance_factor(c.f, c.g);
  return factor.is_one() || factor == c.g[0] || factor == c.g[1] || factor == c.g[2];
}

int character_multiplicity(const SymmetryCase& c, const CycloNum& chi) {
  const CycloNum chi_w = form_character(c);
  int n = 0;
  for (const auto& entry : c.basis)
    if (monomial_character(entry.front(), c.g) * chi_w == chi) ++n;
  return n;
}

std::optional<std::size_t> basis_index(const MonomialBasis& basis, const Monomial& m) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (std::find(basis[k].begin(), basis[k].end(), m) != basis[k].end()) return k;
  return std::nullopt;
}

SymmetryCase symmetry_case_from_json(const nlohmann::json& row, const nlohmann::json& families) {
  SymmetryCase c;
  c.name = row.at("name").get<std::string>();
  c.notation = row.value("notation", c.name);
  const auto& fam = families.at(row.at("family").get<std::string>());
  c.f = parse_monomials(fam.at("f"));
  c.basis = parse_basis(fam.at("basis"));
  c.g = parse_symmetry(row.at("g").get<std::vector<std::string>>());
  c.expected.order = row.at("order").get<int>();
  c.expected.versal = parse_monomials(row.at("versal"));
  if (!row.at("kernel_chi").is_null()) {
    const auto k = row.at("kernel_chi").get<std::vector<std::string>>();
    c.expected.kernel_chi = std::make_pair(parse_cyclo(k.at(0)), parse_cyclo(k.at(1)));
  }
  if (row.contains("affine_group") && !row.at("affine_group").is_null())
    c.expected.affine_group = row.at("affine_group").get<std::string>();
  return c;
}

std::vector<SymmetryCase> table1_cases() {
  static const std::vector<SymmetryCase> cases = [] {
    std::vector<SymmetryCase> out;
    const auto& j = data::table1();
    for (const auto& row : j.at("rows")) out.push_back(symmetry_case_from_json(row, j.at("families")));
    return out;
  }();
  return cases;
}

const SymmetryCase& table1_case(const std::string& name) {
  static const std::vector<SymmetryCase> cases = table1_cases();
  for (const auto& c : cases)
    if (c.name == name) return c;
  throw ClassifyError("unknown Table 1 row '" + name + "'");
}

std::vector<ProjRow> proj_rows() {
  std::vector<ProjRow> out;
  for (const auto& row : data::pproj().at("rows")) {
    ProjRow r;
    r.row = row.at("row").get<int>();
    r.f = parse_monomials(row.at("f"));
    r.kappa = parse_symmetry(row.at("kappa").get<std::vector<std::string>>());
    r.basis = parse_basis(row.at("basis"));
    r.splits_kernel = row.at("splits_kernel").get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

Report verify_table1_row(const SymmetryCase& c) {
  Report rep("table1", c.name);
  const std::string p = c.name + ".";

  const auto factor = try_equivariance_factor(c.f, c.g);
  rep.add(p + "equivariant", "g multiplies every term of f by the same constant", factor.has_value(),
          factor ? nlohmann::json{{"c", to_string(*factor)}} : nlohmann::json{});
  if (!factor) return rep;

  const int order = symmetry_order(c.g);
  rep.add(p + "order", "symmetry order |g|", order == c.expected.order,
          {{"computed", order}, {"table", c.expected.order}});

  rep.add(p + "alternates", "equivalent local-ring monomials carry equal characters",
          alternates_consistent(c.basis, c.g));

  const auto computed = versal_indices(c);
  std::vector<std::size_t> expected;
  bool expected_known = true;
  for (const auto& m : c.expected.versal) {
    if (auto k = basis_index(c.basis, m))
      expected.push_back(*k);
    else
      expected_known = false;
  }
  std::sort(expected.begin(), expected.end());
  rep.add(p + "versal", "versal monomials are the basis monomials scaled like f",
          expected_known && expected == computed,
          {{"computed", monomial_names(versal_monomials(c))}, {"table", monomial_names(c.expected.versal)}});

  bool cubic_free = true;
  for (auto k : computed)
    if (c.basis[k].front().degree() == 3) cubic_free = false;
  rep.add(p + "no_cubic_versal", "the degree-3 basis element is not versal", cubic_free);

  const auto kc = kernel_characters(c);
  bool chi_ok = false;
  if (kc && c.expected.kernel_chi) {
    const auto& [a, b] = *kc;
    const auto& [x, y] = *c.expected.kernel_chi;
    chi_ok = (a == x && b == y) || (a == y && b == x);
  }
  nlohmann::json chi_w{{"chi_w", to_string(form_character(c))}};
  if (c.expected.kernel_chi)
    chi_w["table"] = {to_string(c.expected.kernel_chi->first), to_string(c.expected.kernel_chi->second)};
  rep.add(p + "kernel_chi", "kernel characters are the eigenvalue of w and its conjugate", chi_ok, chi_w);

  rep.add(p + "smoothable", "c matches the character of 1, x, y or z", is_smoothable(c),
          {{"c", to_string(*factor)}});

  if (kc) {
    const int tau = static_cast<int>(computed.size());
    const int m1 = character_multiplicity(c, kc->first), m2 = character_multiplicity(c, kc->second);
    rep.add(p + "multiplicity", "kernel-character multiplicity equals the R_g-codimension",
            m1 == tau && m2 == tau, {{"tau", tau}, {"chi", m1}, {"conj_chi", m2}});
  }
  return rep;
}

Report verify_table1() {
  Report rep("table1", "all");
  for (const auto& c : table1_cases()) rep.append(verify_table1_row(c));
  return rep;
}

Report verify_proj_row(const ProjRow& r) {
  Report rep("pproj", "row" + std::to_string(r.row));
  const std::string p = "row" + std::to_string(r.row) + ".";
  const auto factor = try_equivariance_factor(r.f, r.kappa);
  rep.add(p + "equivariant", "the diagonal map is an automorphism of the cubic", factor.has_value(),
          factor ? nlohmann::json{{"c", to_string(*factor)}} : nlohmann::json{});
  if (!factor) return rep;
  rep.add(p + "alternates", "equivalent local-ring monomials carry equal characters",
          alternates_consistent(r.basis, r.kappa));
  const CycloNum chi_w = r.kappa[0] * r.kappa[1] * r.kappa[2] / *factor;
  const auto& set = kernel_character_set();
  const bool splits = std::find(set.begin(), set.end(), chi_w) != set.end();
  rep.add(p + "kernel_split", "liftings split the kernel exactly for the first four rows",
          splits == r.splits_kernel, {{"chi_w", to_string(chi_w)}, {"expected", r.splits_kernel}});
  return rep;
}

Report verify_proj_rows() {
  Report rep("pproj", "all");
  for (const auto& r : proj_rows()) rep.append(verify_proj_row(r));
  return rep;
}

}  // namespace p8

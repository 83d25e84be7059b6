#include "p8cryst/monodromy.hpp"

#include <map>
#include <mutex>

#include "p8cryst/classify.hpp"
#include "p8cryst/closure.hpp"
#include "p8cryst/data.hpp"

namespace p8 {

namespace {

Subring parse_ring(const std::string& s) {
  if (s == "Z") return Subring::Z;
  if (s == "Z_i") return Subring::Z_i;
  if (s == "Z_omega") return Subring::Z_omega;
  throw MonodromyError("unknown ring '" + s + "'");
}

const char* ring_name(Subring r) {
  switch (r) {
    case Subring::Z:
      return "Z";
    case Subring::Z_i:
      return "Z_i";
    case Subring::Z_omega:
      return "Z_omega";
  }
  return "Z";
}

Vector parse_vector(const nlohmann::json& arr) {
  Vector v;
  for (const auto& x : arr) v.push_back(parse_cyclo(x.get<std::string>()));
  return v;
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

CycloNum norm2(const CycloNum& x) { return x * x.conj(); }

// Cycle-space operator of cycle c with the full k x k Gram.
Matrix cycle_space_operator(const HermitianGram& g, std::size_t c, const CycloNum& lambda) {
  return pl_operator(g, unit_vector(g.dim(), c), lambda).matrix;
}

}  // namespace

std::size_t DiagramSpec::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < cycles.size(); ++k)
    if (cycles[k].id == id) return k;
  throw MonodromyError("diagram " + name + " has no cycle '" + id + "'");
}

CycloNum DiagramSpec::lambda(std::size_t k) const {
  const Bindings b{{"chi", chi()}};
  return parse_cyclo(cycles.at(k).lambda_expr, CyclotomicField::get(kDefaultConductor), b);
}

std::vector<CycloNum> DiagramSpec::lambdas() const {
  std::vector<CycloNum> out;
  for (std::size_t k = 0; k < cycles.size(); ++k) out.push_back(lambda(k));
  return out;
}

DiagramSpec diagram_from_json(const nlohmann::json& j) {
  DiagramSpec d;
  d.name = j.at("name").get<std::string>();
  d.ring = parse_ring(j.at("ring").get<std::string>());
  const auto chis = j.at("kernel_chi").get<std::vector<std::string>>();
  if (chis.size() != 2) throw MonodromyError(d.name + ": kernel_chi needs two entries");
  d.kernel_chi = {parse_cyclo(chis[0]), parse_cyclo(chis[1])};
  for (const auto& c : j.at("cycles")) {
    CycleSpec cs;
    cs.id = c.at("id").get<std::string>();
    cs.label = c.value("label", cs.id);
    const CycloNum self = parse_cyclo(c.at("self").get<std::string>());
    if (!self.is_rational()) throw MonodromyError(d.name + ": self-intersection must be rational");
    cs.self = self.to_rational();
    cs.order = c.at("order").get<int>();
    cs.lambda_expr = c.at("lambda").get<std::string>();
    d.cycles.push_back(std::move(cs));
  }
  for (const auto& e : j.at("edges")) {
    EdgeSpec es;
    es.from = e.at("from").get<std::string>();
    es.to = e.at("to").get<std::string>();
    es.values.push_back(parse_cyclo(e.at("value").get<std::string>()));
    if (e.contains("alternatives"))
      for (const auto& a : e.at("alternatives")) {
        const CycloNum v = parse_cyclo(a.get<std::string>());
        if (norm2(v) != norm2(es.values.front()))
          throw MonodromyError(d.name + ": alternative value with a different magnitude");
        es.values.push_back(v);
      }
    if (e.contains("braid") && !e.at("braid").is_null()) es.braid = e.at("braid").get<int>();
    d.edges.push_back(std::move(es));
  }
  if (j.contains("relation") && !j.at("relation").is_null()) d.relation = parse_vector(j.at("relation"));
  d.kernel_vector = parse_vector(j.at("kernel_vector"));
  d.omitted_root = j.at("omitted_root").get<std::string>();
  d.expected_group = j.at("expected_group").get<std::string>();
  d.tau = j.at("tau").get<int>();
  if (j.contains("monodromy_order"))
    d.monodromy_order = j.at("monodromy_order").get<std::vector<std::string>>();
  if (j.contains("maximal_root") && !j.at("maximal_root").is_null()) {
    const auto& m = j.at("maximal_root");
    d.maximal_root = MaximalRootSpec{parse_cyclo(m.at("scalar").get<std::string>()),
                                     m.at("word").get<std::vector<std::string>>(),
                                     m.at("root").get<std::string>()};
  }
  d.conjugated = j.value("conjugated", false);

  // Structural invariants.
  const std::size_t k = d.cycles.size();
  if (k < 2 || k > 4) throw MonodromyError(d.name + ": expected 2 to 4 cycles");
  const int expected_tau = static_cast<int>(k) - (d.relation ? 1 : 0);
  if (d.tau != expected_tau) throw MonodromyError(d.name + ": tau does not match cycles and relation");
  if (d.relation && d.relation->size() != k) throw MonodromyError(d.name + ": relation has wrong length");
  if (static_cast<int>(d.kernel_vector.size()) != d.tau)
    throw MonodromyError(d.name + ": kernel vector has wrong length");
  if (!d.kernel_vector.front().is_one()) throw MonodromyError(d.name + ": kernel vector must start with 1");
  if (d.index_of(d.omitted_root) != 0) throw MonodromyError(d.name + ": omitted root must be the first cycle");
  for (const auto& e : d.edges) {
    d.index_of(e.from);
    d.index_of(e.to);
    if (e.braid && *e.braid != 3 && *e.braid != 4 && *e.braid != 6)
      throw MonodromyError(d.name + ": braid length must be 3, 4 or 6");
  }
  for (const auto& id : d.monodromy_order) d.index_of(id);
  if (d.maximal_root) {
    d.index_of(d.maximal_root->root);
    for (const auto& id : d.maximal_root->word) d.index_of(id);
  }
  return d;
}

nlohmann::json diagram_to_json(const DiagramSpec& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["ring"] = ring_name(d.ring);
  j["kernel_chi"] = {to_string(d.kernel_chi[0]), to_string(d.kernel_chi[1])};
  j["cycles"] = nlohmann::json::array();
  for (const auto& c : d.cycles)
    j["cycles"].push_back({{"id", c.id},
                           {"label", c.label},
                           {"self", c.self.get_str()},
                           {"order", c.order},
                           {"lambda", c.lambda_expr}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : d.edges) {
    nlohmann::json ej{{"from", e.from}, {"to", e.to}, {"value", to_string(e.values.front())}};
    if (e.values.size() > 1) {
      ej["alternatives"] = nlohmann::json::array();
      for (std::size_t k = 1; k < e.values.size(); ++k) ej["alternatives"].push_back(to_string(e.values[k]));
    }
    ej["braid"] = e.braid ? nlohmann::json(*e.braid) : nlohmann::json(nullptr);
    j["edges"].push_back(std::move(ej));
  }
  j["relation"] = d.relation ? vector_json(*d.relation) : nlohmann::json(nullptr);
  j["kernel_vector"] = vector_json(d.kernel_vector);
  j["omitted_root"] = d.omitted_root;
  j["expected_group"] = d.expected_group;
  j["tau"] = d.tau;
  if (!d.monodromy_order.empty()) j["monodromy_order"] = d.monodromy_order;
  if (d.maximal_root)
    j["maximal_root"] = {{"scalar", to_string(d.maximal_root->scalar)},
                         {"word", d.maximal_root->word},
                         {"root", d.maximal_root->root}};
  j["conjugated"] = d.conjugated;
  return j;
}

const std::vector<DiagramSpec>& builtin_diagrams() {
  static const std::vector<DiagramSpec> all = [] {
    std::vector<DiagramSpec> out;
    for (const auto& j : data::diagrams().at("diagrams")) out.push_back(diagram_from_json(j));
    return out;
  }();
  return all;
}

const DiagramSpec& builtin_diagram(const std::string& name) {
  for (const auto& d : builtin_diagrams())
    if (d.name == name) return d;
  throw UnknownName("unknown diagram '" + name + "'");
}

DiagramSpec conjugate_spec(const DiagramSpec& d) {
  DiagramSpec c = d;
  std::swap(c.kernel_chi[0], c.kernel_chi[1]);
  for (auto& e : c.edges)
    for (auto& v : e.values) v = v.conj();
  if (c.relation) c.relation = conj(*c.relation);
  c.kernel_vector = conj(c.kernel_vector);
  if (c.maximal_root) c.maximal_root->scalar = c.maximal_root->scalar.conj();
  c.conjugated = !d.conjugated;
  return c;
}

DiagramSpec diagram_for(const std::string& name, ChiChoice chi) {
  const DiagramSpec& d = builtin_diagram(name);
  return chi == ChiChoice::primary ? d : conjugate_spec(d);
}

// ---------------------------------------------------------------------------

HermitianGram gram_for_choices(const DiagramSpec& d, const std::vector<EdgeChoice>& choices) {
  const std::size_t k = d.cycles.size();
  if (choices.size() != d.edges.size()) throw MonodromyError("one choice per edge required");
  Matrix m(k, k);
  std::vector<std::vector<bool>> set(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) m(c, c) = CycloNum(d.cycles[c].self);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    std::size_t a = d.index_of(d.edges[e].from), b = d.index_of(d.edges[e].to);
    if (a == b) throw MonodromyError(d.name + ": self edge");
    if (set[a][b]) throw MonodromyError(d.name + ": duplicate edge");
    set[a][b] = set[b][a] = true;
    const CycloNum& v = d.edges[e].values.at(choices[e].option);
    if (choices[e].flipped) std::swap(a, b);
    m(a, b) = v;
    m(b, a) = v.conj();
  }
  return HermitianGram(std::move(m));
}

std::string first_violation(const DiagramSpec& d, const HermitianGram& g) {
  const std::size_t k = g.dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && !subring_member(g(i, j), d.ring)) return "ring";
  for (const auto& e : d.edges) {
    const std::size_t a = d.index_of(e.from), b = d.index_of(e.to);
    if (norm2(g(a, b)) != norm2(e.values.front())) return "magnitude";
  }
  if (!is_negative_semidefinite(g)) return "semidefinite";
  if (d.relation) {
    if (!is_zero(g.matrix() * conj(*d.relation))) return "relation";
  }
  const Quotient q = quotient_basis(d, g);
  if (static_cast<int>(q.gram.dim()) != d.tau) return "tau";
  if (rank(q.gram) + 1 != q.gram.dim()) return "quotient_corank";
  if (!is_zero(q.gram.matrix() * conj(d.kernel_vector))) return "kernel_vector";
  return {};
}

ConcreteGram reconcile(const DiagramSpec& d) {
  static std::mutex mutex;
  static std::map<std::string, ConcreteGram> cache;
  const std::string key = diagram_to_json(d).dump();
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  static const char* const constraint_order[] = {"ring",     "magnitude",       "semidefinite", "relation",
                                                 "tau",      "quotient_corank", "kernel_vector"};
  auto depth_of = [](const std::string& v) {
    for (int i = 0; i < 7; ++i)
      if (v == constraint_order[i]) return i;
    return -1;
  };

  // Per edge: value options x orientation (flip skipped for real values).
  std::vector<std::vector<EdgeChoice>> options(d.edges.size());
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    for (std::size_t o = 0; o < d.edges[e].values.size(); ++o) {
      options[e].push_back({o, false});
      if (d.edges[e].values[o] != d.edges[e].values[o].conj()) options[e].push_back({o, true});
    }

  std::vector<std::size_t> odo(d.edges.size(), 0);
  std::size_t tried = 0;
  int best_depth = -1;
  std::string best_violation = "no candidate";
  for (;;) {
    std::vector<EdgeChoice> choice;
    for (std::size_t e = 0; e < odo.size(); ++e) choice.push_back(options[e][odo[e]]);
    ++tried;
    std::string violation;
    HermitianGram g;
    try {
      g = gram_for_choices(d, choice);
      violation = first_violation(d, g);
    } catch (const std::exception& ex) {
      violation = std::string("construction: ") + ex.what();
    }
    if (violation.empty()) {
      ConcreteGram out{std::move(g), std::move(choice), tried};
      std::lock_guard<std::mutex> lock(mutex);
      cache.emplace(key, out);
      return out;
    }
    if (depth_of(violation) > best_depth) {
      best_depth = depth_of(violation);
      best_violation = violation;
    }
    // Advance the odometer; the last edge varies fastest.
    std::size_t e = odo.size();
    while (e > 0) {
      --e;
      if (++odo[e] < options[e].size()) break;
      odo[e] = 0;
      if (e == 0) {
        e = odo.size() + 1;
        break;
      }
    }
    if (odo.empty() || e == odo.size() + 1) break;
  }
  throw ReconcileFailure(d.name, best_violation);
}

nlohmann::json describe_choices(const DiagramSpec& d, const ConcreteGram& c) {
  nlohmann::json j;
  j["candidates_tried"] = c.candidates_tried;
  j["edges"] = nlohmann::json::array();
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& es = d.edges[e];
    const auto& ch = c.choices[e];
    const std::string a = ch.flipped ? es.to : es.from, b = ch.flipped ? es.from : es.to;
    j["edges"].push_back({{"edge", es.from + "-" + es.to},
                          {"option", ch.option},
                          {"flipped", ch.flipped},
                          {"entry", "<" + a + "," + b + "> = " + to_string(es.values[ch.option])}});
  }
  return j;
}

Quotient quotient_basis(const DiagramSpec& d, const HermitianGram& g) {
  const std::size_t k = g.dim();
  if (!d.relation) return {g, Matrix::identity(k), std::nullopt};
  const Vector& r = *d.relation;
  if (!is_zero(g.matrix() * conj(r)))
    throw MonodromyError(d.name + ": relation is not in the null space of the Gram matrix");
  const std::size_t last = k - 1;
  if (r[last].is_zero()) throw MonodromyError(d.name + ": relation has no component on the dropped cycle");
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < last; ++c) keep.push_back(c);
  Matrix proj(last, k);
  for (std::size_t c = 0; c < last; ++c) proj(c, c) = CycloNum(1);
  for (std::size_t j = 0; j < last; ++j) proj(j, last) = -r[j] / r[last];
  return {HermitianGram(g.matrix().submatrix(keep, keep)), std::move(proj), last};
}

PLOperator pl_operator(const HermitianGram& g, const Vector& root, const CycloNum& lambda) {
  const std::size_t n = g.dim();
  if (root.size() != n) throw MonodromyError("root has wrong dimension");
  if (lambda.is_one()) throw MonodromyError("eigenvalue 1 gives no reflection");
  const CycloNum rr = herm_eval(g, root, root);
  if (rr.is_zero()) throw MonodromyError("isotropic root");
  const CycloNum f = (CycloNum(1) - lambda) / rr;
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CycloNum c = herm_eval(g, unit_vector(n, i), root);
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (!root[k].is_zero()) m(k, i) -= f * c * root[k];
  }
  return {std::move(m), root, lambda, {}};
}

std::vector<PLOperator> diagram_operators(const DiagramSpec& d, const Quotient& q) {
  std::vector<PLOperator> out;
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    PLOperator op = pl_operator(q.gram, q.projection.col(c), d.lambda(c));
    op.root_id = d.cycles[c].id;
    out.push_back(std::move(op));
  }
  return out;
}

bool check_braid(const Matrix& a, const Matrix& b, int length) {
  if (length < 2) throw MonodromyError("braid length must be at least 2");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MonodromyError("braid operands differ in size");
  Matrix lhs = Matrix::identity(a.rows()), rhs = Matrix::identity(a.rows());
  for (int k = 0; k < length; ++k) {
    lhs = lhs * (k % 2 == 0 ? a : b);
    rhs = rhs * (k % 2 == 0 ? b : a);
  }
  return lhs == rhs;
}

Matrix classical_monodromy(const DiagramSpec& d, const std::vector<PLOperator>& ops) {
  Matrix m = Matrix::identity(ops.at(0).matrix.rows());
  if (d.monodromy_order.empty()) {
    for (const auto& op : ops) m = m * op.matrix;
  } else {
    for (const auto& id : d.monodromy_order) m = m * ops.at(d.index_of(id)).matrix;
  }
  return m;
}

Matrix classical_monodromy(const DiagramSpec& d) {
  const ConcreteGram c = reconcile(d);
  const Quotient q = quotient_basis(d, c.gram);
  return classical_monodromy(d, diagram_operators(d, q));
}

bool extra_relation_P8Z3(const Matrix& h0, const Matrix& h1, const Matrix& h2) {
  const Matrix lhs = (h1 * h0 * h2 * h0).pow(2);
  const Matrix rhs = (h0 * h2 * h0 * h1).pow(2);
  return lhs == rhs;
}

FoldResult fold(const DiagramSpec& d, const std::string& swap_a, const std::string& swap_b, int sign) {
  if (sign != 1 && sign != -1) throw MonodromyError("fold sign must be +1 or -1");
  const std::size_t a = d.index_of(swap_a), b = d.index_of(swap_b);
  if (a == b) throw MonodromyError("fold: degenerate swap (identity)");
  if (d.relation) throw MonodromyError("fold: datasets with relations are not supported");
  const HermitianGram g = reconcile(d).gram;
  const std::size_t k = g.dim();
  // The swap must be a symmetry of the Gram matrix.
  auto swapped = [&](std::size_t i) { return i == a ? b : i == b ? a : i; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (g(swapped(i), swapped(j)) != g(i, j)) throw MonodromyError("fold: swap is not a symmetry of the Gram matrix");
  if (d.lambda(a) != d.lambda(b)) throw MonodromyError("fold: swapped cycles have different eigenvalues");

  const std::size_t lo = std::min(a, b), hi = std::max(a, b);
  FoldResult out;
  const auto lambdas = d.lambdas();
  for (std::size_t i = 0; i < k; ++i) {
    if (i == hi) continue;
    if (i == lo) {
      Vector v = unit_vector(k, a);
      v[b] = CycloNum(sign);
      // The product of the two commuting operators acts on the orbit vector
      // by a scalar, which becomes the eigenvalue of the folded cycle.
      const Matrix h = cycle_space_operator(g, a, lambdas[a]) * cycle_space_operator(g, b, lambdas[b]);
      const Vector hv = h * v;
      const CycloNum mu = hv[a];
      if (hv != scale(mu, v)) throw MonodromyError("fold: orbit vector is not an eigenvector");
      out.basis.push_back(std::move(v));
      out.lambdas.push_back(mu);
    } else {
      out.basis.push_back(unit_vector(k, i));
      out.lambdas.push_back(lambdas[i]);
    }
  }
  out.gram = g.restrict_to(out.basis);
  if (!is_negative_semidefinite(out.gram)) throw MonodromyError("fold variant violates semidefinite");
  const auto ker = kernel(out.gram);
  if (ker.size() != 1) throw MonodromyError("fold variant violates quotient_corank");
  Vector kv = ker.front();
  if (kv[0].is_zero()) throw MonodromyError("fold variant violates kernel_vector");
  out.kernel_vector = scale(kv[0].inverse(), kv);
  return out;
}

// ---------------------------------------------------------------------------

Report verify_diagram(const DiagramSpec& d) {
  Report rep("diagram", d.name, to_string(d.chi()));
  ConcreteGram cg;
  try {
    cg = reconcile(d);
  } catch (const ReconcileFailure& e) {
    rep.add("reconcile", "a consistent choice of edge values and orientations exists", false,
            {{"violated", e.constraint()}});
    return rep;
  }
  rep.resolved_choices() = describe_choices(d, cg);
  const HermitianGram& g = cg.gram;
  rep.add("gram.hermitian", "intersection matrix is hermitian", true, to_string(g.matrix()));
  rep.add("gram.semidefinite", "intersection form is negative semi-definite", is_negative_semidefinite(g),
          {{"rank", rank(g)}});
  if (d.relation)
    rep.add("relation", "the stated relation between cycles lies in the radical",
            is_zero(g.matrix() * conj(*d.relation)), vector_json(*d.relation));

  const Quotient q = quotient_basis(d, g);
  const auto ker = kernel(q.gram);
  rep.add("quotient.corank", "induced form on the character subspace has corank 1", ker.size() == 1,
          {{"dim", q.gram.dim()}, {"corank", ker.size()}});
  rep.add("kernel_vector", "kernel generator e0 + a spans the radical",
          ker.size() == 1 && is_zero(q.gram.matrix() * conj(d.kernel_vector)), vector_json(d.kernel_vector));
  rep.add("tau", "dimension of the character subspace", static_cast<int>(q.gram.dim()) == d.tau,
          {{"tau", d.tau}});
  try {
    const SymmetryCase& sc = table1_case(d.name);
    const int m = character_multiplicity(sc, d.chi());
    const int nv = static_cast<int>(versal_indices(sc).size());
    rep.add("tau.multiplicity", "character multiplicity equals tau and the number of versal monomials",
            m == d.tau && nv == d.tau, {{"multiplicity", m}, {"versal", nv}, {"tau", d.tau}});
  } catch (const ClassifyError&) {
    rep.add("tau.multiplicity", "diagram has a Table 1 row", false);
  }

  std::vector<PLOperator> ops;
  try {
    ops = diagram_operators(d, q);
  } catch (const MonodromyError& e) {
    rep.add("operators", "Picard-Lefschetz operators are defined", false, e.what());
    return rep;
  }
  for (std::size_t c = 0; c < ops.size(); ++c) {
    const auto& op = ops[c];
    const std::string p = "op." + d.cycles[c].id + ".";
    rep.add(p + "preserves", "operator preserves the hermitian form", preserves_form(op.matrix, q.gram));
    const auto order = try_operator_order(op.matrix, 24);
    rep.add(p + "order", "operator has the stated order", order && *order == d.cycles[c].order,
            {{"stated", d.cycles[c].order}, {"computed", order ? nlohmann::json(*order) : nlohmann::json("> 24")}});
    rep.add(p + "eigenvalue", "eigenvalue is a root of unity of the stated order",
            root_of_unity_order(op.lambda) == d.cycles[c].order, to_string(op.lambda));
    const Matrix diff = op.matrix - Matrix::identity(op.matrix.rows());
    rep.add(p + "reflection", "operator is a complex reflection with root e and eigenvalue lambda",
            diff.rank() == 1 && op.matrix.det() == op.lambda && op.matrix * op.root == scale(op.lambda, op.root));
    rep.add(p + "kernel_fixed", "operator fixes the kernel generator", op.matrix * d.kernel_vector == d.kernel_vector);
    if (d.relation) {
      const Matrix lifted = cycle_space_operator(g, c, op.lambda);
      rep.add(p + "lift", "cycle-space operator descends to the quotient",
              q.projection * lifted == op.matrix * q.projection && is_zero(q.projection * (lifted * *d.relation)));
    }
  }
  for (const auto& e : d.edges) {
    if (!e.braid) continue;
    const std::size_t a = d.index_of(e.from), b = d.index_of(e.to);
    rep.add("braid." + e.from + "-" + e.to, "edge braid relation of the stated length",
            check_braid(ops[a].matrix, ops[b].matrix, *e.braid), {{"length", *e.braid}});
  }
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b)
      if (g(a, b).is_zero())
        rep.add("commute." + d.cycles[a].id + "-" + d.cycles[b].id, "orthogonal cycles give commuting operators",
                check_braid(ops[a].matrix, ops[b].matrix, 2));
  if (d.name == "P8_Z3")
    rep.add("extra_relation", "(h1 h0 h2 h0)^2 = (h0 h2 h0 h1)^2",
            extra_relation_P8Z3(ops[0].matrix, ops[1].matrix, ops[2].matrix));

  const Matrix mono = classical_monodromy(d, ops);
  const auto mono_order = try_operator_order(mono, 24);
  nlohmann::json order_list = nlohmann::json::array();
  if (d.monodromy_order.empty())
    for (const auto& c : d.cycles) order_list.push_back(c.id);
  else
    order_list = d.monodromy_order;
  rep.add("classical_order", "product of all generators has order 3", mono_order && *mono_order == 3,
          {{"order", mono_order ? nlohmann::json(*mono_order) : nlohmann::json("infinite or > 24")},
           {"product", order_list}});

  if (d.name == "C3_33") {
    const DiagramSpec d4 = diagram_for("D4_3", d.conjugated ? ChiChoice::conj : ChiChoice::primary);
    bool ok = false;
    nlohmann::json w;
    try {
      const FoldResult f = fold(d4, "e2", "e3", 1);
      ok = f.gram.matrix() == g.matrix() && f.lambdas == d.lambdas() && f.kernel_vector == d.kernel_vector;
      w["gram"] = to_string(f.gram.matrix());
    } catch (const MonodromyError& e) {
      w["error"] = e.what();
    }
    std::string rejected;
    try {
      fold(d4, "e2", "e3", -1);
    } catch (const MonodromyError& e) {
      rejected = e.what();
    }
    w["other_variant"] = rejected.empty() ? "accepted" : rejected;
    rep.add("fold", "dataset is the folding of D4_3 along the leaf swap", ok && !rejected.empty(), w);
  }
  return rep;
}

}  // namespace p8

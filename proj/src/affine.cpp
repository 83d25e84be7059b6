#include "p8cryst/affine.hpp"

#include <mutex>
#include <unordered_map>

#include "p8cryst/data.hpp"

namespace p8 {

AffineIsometry AffineIsometry::identity(std::size_t n) { return {Matrix::identity(n), zero_vector(n)}; }

AffineIsometry AffineIsometry::pure_linear(Matrix a) {
  const std::size_t n = a.rows();
  return {std::move(a), zero_vector(n)};
}

AffineIsometry AffineIsometry::pure_translation(Vector t) {
  const std::size_t n = t.size();
  return {Matrix::identity(n), std::move(t)};
}

Vector AffineIsometry::apply(const Vector& x) const { return add(linear * x, translation); }

AffineIsometry AffineIsometry::inverse() const {
  Matrix inv = linear.inverse();
  Vector t = inv * translation;
  for (auto& x : t) x = -x;
  return {std::move(inv), std::move(t)};
}

std::size_t AffineIsometry::hash() const noexcept {
  std::size_t h = linear.hash();
  for (const auto& x : translation) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

AffineIsometry operator*(const AffineIsometry& a, const AffineIsometry& b) {
  return {a.linear * b.linear, add(a.linear * b.translation, a.translation)};
}

AffineIsometry conj(const AffineIsometry& a) { return {a.linear.conj(), conj(a.translation)}; }

// ---------------------------------------------------------------------------

DualFrame DualFrame::build(const HermitianGram& quotient_gram, const Vector& kernel_vector,
                           const CycloNum& alpha0) {
  DualFrame f;
  f.tau = quotient_gram.dim();
  if (f.tau < 2) throw AffineError("dual frame needs tau >= 2");
  if (kernel_vector.size() != f.tau || !kernel_vector[0].is_one())
    throw AffineError("kernel vector must have length tau and leading entry 1");
  if (!is_zero(quotient_gram.matrix() * conj(kernel_vector)))
    throw AffineError("kernel vector is not in the radical");
  if (alpha0.is_zero()) throw AffineError("alpha0 must be nonzero");
  f.n = f.tau - 1;
  std::vector<std::size_t> idx;
  for (std::size_t j = 1; j < f.tau; ++j) idx.push_back(j);
  f.q = HermitianGram(quotient_gram.matrix().submatrix(idx, idx));
  if (rank(f.q) != f.n || !is_negative_semidefinite(f.q)) throw AffineError("restricted form is not negative definite");
  f.a.assign(kernel_vector.begin() + 1, kernel_vector.end());
  f.alpha0 = alpha0;
  return f;
}

std::pair<CycloNum, Vector> DualFrame::split(const Vector& c) const {
  if (c.size() != tau) throw AffineError("vector has wrong dimension for the frame");
  Vector u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = c[j + 1] - c[0] * a[j];
  return {c[0], std::move(u)};
}

Matrix DualFrame::to_frame(const Matrix& m) const {
  // F has columns (e0', e1, .., en); F^-1 subtracts c0 * a.
  Matrix fm = Matrix::identity(tau);
  for (std::size_t j = 0; j < n; ++j) fm(j + 1, 0) = a[j];
  Matrix finv = Matrix::identity(tau);
  for (std::size_t j = 0; j < n; ++j) finv(j + 1, 0) = -a[j];
  return finv * m * fm;
}

AffineIsometry dual_affine_reflection(const DualFrame& f, const CycloNum& u0, const Vector& u,
                                      const CycloNum& lambda) {
  if (u.size() != f.n) throw AffineError("root has wrong dimension");
  if (is_zero(u)) throw AffineError("root lies in the kernel");
  if (lambda.is_one()) throw AffineError("eigenvalue 1 gives no reflection");
  const CycloNum qq = herm_eval(f.q, u, u);
  const CycloNum c = (CycloNum(1) - lambda.conj()) / qq;
  const Vector ub = conj(u);
  Vector uq(f.n);
  for (std::size_t j = 0; j < f.n; ++j) {
    CycloNum s;
    for (std::size_t k = 0; k < f.n; ++k) s += u[k] * f.q(k, j);
    uq[j] = s;
  }
  AffineIsometry out = AffineIsometry::identity(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    if (ub[i].is_zero()) continue;
    for (std::size_t j = 0; j < f.n; ++j) out.linear(i, j) -= c * ub[i] * uq[j];
    out.translation[i] = -(c * f.alpha0 * u0 * ub[i]);
  }
  return out;
}

AffineIsometry pullback(const DualFrame& f, const Matrix& m) {
  const Matrix mf = f.to_frame(m);
  if (!mf(0, 0).is_one())
    throw AffineError("operator does not fix the kernel generator");
  for (std::size_t i = 1; i < f.tau; ++i)
    if (!mf(i, 0).is_zero()) throw AffineError("operator does not fix the kernel generator");
  std::vector<std::size_t> idx;
  for (std::size_t j = 1; j < f.tau; ++j) idx.push_back(j);
  const Matrix b = mf.submatrix(idx, idx);
  const Matrix qinv = f.q.matrix().inverse();
  Vector row(f.n);
  for (std::size_t j = 0; j < f.n; ++j) row[j] = f.alpha0 * mf(0, j + 1);
  return {qinv * b.transpose() * f.q.matrix(), qinv * row};
}

bool preserves_conj_form(const Matrix& a, const HermitianGram& q) {
  return preserves_form(a, HermitianGram(q.matrix().transpose()));
}

// ---------------------------------------------------------------------------

namespace {

bool parallel_to(const Vector& c, const Vector& r) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[i] * r[j] != c[j] * r[i]) return false;
  return true;
}

// Largest order of a reflection in the group whose root line contains r; 0 if none.
int root_order(const std::vector<Matrix>& group, const Vector& r) {
  int best = 0;
  for (const auto& g : group) {
    const Matrix d = g - Matrix::identity(g.rows());
    if (d.rank() != 1) continue;
    Vector col;
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!is_zero(d.col(j))) {
        col = d.col(j);
        break;
      }
    if (!parallel_to(col, r)) continue;
    if (auto k = try_operator_order(g, 24)) best = std::max(best, *k);
  }
  return best;
}

Vector parse_vec(const nlohmann::json& a) {
  Vector v;
  for (const auto& x : a) v.push_back(parse_cyclo(x.get<std::string>()));
  return v;
}

ReferenceGroup load_group(const nlohmann::json& j) {
  ReferenceGroup g;
  g.name = j.at("name").get<std::string>();
  g.dim = j.at("dim").get<std::size_t>();
  g.literature_order = j.at("order").get<int>();
  g.provenance = j.value("provenance", "");
  const HermitianGram std_form(Matrix::identity(g.dim));
  for (const auto& gen : j.at("generators")) {
    g.generator_sources.push_back(gen);
    if (gen.contains("matrix")) {
      std::vector<Vector> rows;
      for (const auto& r : gen.at("matrix")) rows.push_back(parse_vec(r));
      g.generators.push_back(Matrix::from_rows(rows));
    } else {
      g.generators.push_back(
          pl_operator(std_form, parse_vec(gen.at("root")), parse_cyclo(gen.at("eigenvalue").get<std::string>()))
              .matrix);
    }
    if (g.generators.back().rows() != g.dim || !g.generators.back().square())
      throw AffineError(g.name + ": generator has wrong size");
  }
  g.designated_root = parse_vec(j.at("designated_root"));
  const auto group = linear_closure(g.generators, 100000, Exec::serial);
  g.designated_order = root_order(group, g.designated_root);
  const auto& lat = j.at("lattice");
  if (lat.contains("ring_basis")) {
    g.rule = ReferenceGroup::Rule::ring;
    std::vector<Vector> gens;
    for (const auto& b : lat.at("ring_basis")) {
      gens.push_back(parse_vec(b));
      g.ring_basis.push_back(gens.back().at(0));
    }
    g.lattice = lattice_from_generators(gens, g.dim);
  } else {
    g.rule = ReferenceGroup::Rule::orbit;
    const Vector r = parse_vec(lat.at("orbit_of"));
    std::vector<Vector> gens;
    for (const auto& m : group) gens.push_back(m * r);
    g.lattice = lattice_from_generators(gens, g.dim);
  }
  return g;
}

const std::vector<ReferenceGroup>& all_groups() {
  static const std::vector<ReferenceGroup> groups = [] {
    std::vector<ReferenceGroup> out;
    for (const auto& j : data::reference_groups().at("groups")) out.push_back(load_group(j));
    return out;
  }();
  return groups;
}

const std::vector<Matrix>& reference_closure(const std::string& name, std::size_t max_group) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, linear_closure(reference_group(name).generators, max_group, Exec::serial)).first;
  return it->second;
}

nlohmann::json lattice_json(const ZLattice& t) {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& v : t.basis()) b.push_back(to_string(v));
  return {{"rank", t.rank()}, {"basis", b}};
}

nlohmann::json word_json(const std::vector<std::size_t>& w, const std::vector<std::string>& names) {
  nlohmann::json j = nlohmann::json::array();
  for (auto k : w) j.push_back(names.at(k));
  return j;
}

}  // namespace

const std::vector<std::string>& reference_group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& g : all_groups()) out.push_back(g.name);
    return out;
  }();
  return names;
}

const ReferenceGroup& reference_group(const std::string& name) {
  for (const auto& g : all_groups())
    if (g.name == name) return g;
  throw UnknownName("unknown group '" + name + "'");
}

std::map<int, int> reflection_profile(const std::vector<Matrix>& group) {
  std::map<int, int> p;
  for (const auto& g : group) {
    if ((g - Matrix::identity(g.rows())).rank() != 1) continue;
    const auto k = try_operator_order(g, 24);
    ++p[k ? *k : 0];
  }
  return p;
}

nlohmann::json profile_json(const std::map<int, int>& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) j[std::to_string(k)] = v;
  return j;
}

// ---------------------------------------------------------------------------

LatticeVerdicts translation_subgroup(const std::vector<AffineIsometry>& gens, const ZLattice& t,
                                     const CrystOptions& opt) {
  LatticeVerdicts out;
  const std::size_t n = t.ambient_dim();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < gens.size(); ++k) names.push_back("g" + std::to_string(k));

  bool invariant = true;
  for (const auto& g : gens)
    if (t.image(g.linear) != t) invariant = false;
  out.invariance = verdict_of(invariant);
  if (!invariant) {
    out.containment = out.fullness = Verdict::fail;
    out.containment_witness = out.fullness_witness = "candidate lattice is not invariant";
    return out;
  }

  // Containment: states (A, t mod T).
  auto reduce = [&](AffineIsometry a) {
    a.translation = t.reduce(a.translation);
    return a;
  };
  std::vector<AffineIsometry> rgens;
  for (const auto& g : gens) rgens.push_back(reduce(g));
  auto step = [&](const AffineIsometry& s, std::size_t k) { return reduce(s * rgens[k]); };
  auto scan = [&](const ClosureResult<AffineIsometry>& res) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < res.elements.size(); ++k)
      if (!res.elements[k].is_linear()) return k;
    return std::nullopt;
  };
  {
    auto res = bfs_closure<AffineIsometry, AffineHash>({AffineIsometry::identity(n)}, gens.size(), step,
                                                        opt.bfs_cap, opt.exec, 1);
    if (auto k = scan(res)) {
      out.containment = Verdict::fail;
      out.containment_witness = {{"word", word_json(res.word(*k), names)},
                                 {"residue", to_string(res.elements[*k].translation)}};
    } else {
      res = bfs_closure<AffineIsometry, AffineHash>({AffineIsometry::identity(n)}, gens.size(), step, opt.bfs_cap,
                                                     opt.exec);
      if (auto k2 = scan(res)) {
        out.containment = Verdict::fail;
        out.containment_witness = {{"word", word_json(res.word(*k2), names)},
                                   {"residue", to_string(res.elements[*k2].translation)}};
      } else if (!res.complete) {
        out.containment = Verdict::inconclusive;
        out.containment_witness = {{"states", res.elements.size()}, {"cap", opt.bfs_cap}};
      } else {
        out.containment = Verdict::pass;
        out.containment_witness = {{"states", res.elements.size()}};
      }
    }
  }

  // Fullness: words x, y of length <= r with equal linear part give the pure
  // translation y^-1 x of length <= 2r.
  std::vector<AffineIsometry> sym;
  std::vector<std::string> sym_names;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    sym.push_back(gens[k]);
    sym_names.push_back(names[k]);
    sym.push_back(gens[k].inverse());
    sym_names.push_back(names[k] + "^-1");
  }
  ZLattice w(n, t.field());
  const std::size_t radius = opt.word_bound / 2;
  std::size_t used_radius = 0, ball = 0;
  bool capped = false;
  nlohmann::json words = nlohmann::json::array();
  for (std::size_t r = 1; r <= radius && !w.contains(t); ++r) {
    auto res = bfs_closure<AffineIsometry, AffineHash>(
        {AffineIsometry::identity(n)}, sym.size(), [&](const AffineIsometry& s, std::size_t k) { return s * sym[k]; },
        opt.bfs_cap, opt.exec, r);
    used_radius = r;
    ball = res.elements.size();
    capped = !res.complete;
    std::unordered_map<Matrix, std::size_t, MatrixHash> first;
    words = nlohmann::json::array();
    for (std::size_t k = 0; k < res.elements.size(); ++k) {
      const auto& x = res.elements[k];
      auto [it, fresh] = first.emplace(x.linear, k);
      if (fresh) continue;
      const auto& y = res.elements[it->second];
      const Vector tau = y.linear.inverse() * sub(x.translation, y.translation);
      if (w.add(tau) && words.size() < 16) {
        auto wy = res.word(it->second), wx = res.word(k);
        nlohmann::json word = nlohmann::json::array();
        for (auto i = wy.rbegin(); i != wy.rend(); ++i) word.push_back(sym_names[*i ^ 1u]);
        for (auto i : wx) word.push_back(sym_names[i]);
        words.push_back({{"word", word}, {"translation", to_string(tau)}});
      }
    }
    if (capped) break;
  }
  const bool full = w.contains(t);
  out.fullness = full ? Verdict::pass : (capped ? Verdict::inconclusive : Verdict::fail);
  out.fullness_witness = {{"radius", used_radius},
                          {"max_word_length", 2 * used_radius},
                          {"ball_size", ball},
                          {"span_rank", w.rank()},
                          {"lattice_rank", t.rank()},
                          {"words", words}};
  return out;
}

MaximalRootResult maximal_root_check(const DiagramSpec& d) {
  if (!d.maximal_root) throw AffineError(d.name + " has no maximal-root identity");
  const ConcreteGram cg = reconcile(d);
  const Quotient q = quotient_basis(d, cg.gram);
  const auto ops = diagram_operators(d, q);
  const auto& mr = *d.maximal_root;
  MaximalRootResult out;
  Vector v = q.projection.col(d.index_of(mr.root));
  for (auto it = mr.word.rbegin(); it != mr.word.rend(); ++it) v = ops[d.index_of(*it)].matrix * v;
  out.value = scale(mr.scalar, v);
  out.target = d.kernel_vector;
  out.target[0] = CycloNum(0);
  out.holds = out.value == out.target;
  return out;
}

// ---------------------------------------------------------------------------

CrystAnalysis analyze_crystallographic(const DiagramSpec& d, const CrystOptions& opt) {
  CrystAnalysis out;
  Report& rep = out.report;
  rep = Report("group", d.name, to_string(d.chi()));
  ConcreteGram cg;
  try {
    cg = reconcile(d);
  } catch (const ReconcileFailure& e) {
    rep.add("reconcile", "a consistent choice of edge values and orientations exists", false,
            {{"violated", e.constraint()}});
    return out;
  }
  rep.resolved_choices() = describe_choices(d, cg);
  const Quotient q = quotient_basis(d, cg.gram);
  std::vector<PLOperator> ops;
  DualFrame frame;
  try {
    ops = diagram_operators(d, q);
    frame = DualFrame::build(q.gram, d.kernel_vector, opt.alpha0);
  } catch (const std::exception& e) {
    rep.add("frame", "kernel generator and negative definite complement give a frame", false, e.what());
    return out;
  }
  rep.add("frame", "kernel generator and negative definite complement give a frame", true,
          {{"alpha0", to_string(opt.alpha0)}, {"Q", to_string(frame.q.matrix())}});

  std::vector<std::string> names;
  for (std::size_t c = 0; c < ops.size(); ++c) {
    const auto& op = ops[c];
    const std::string p = "dual." + d.cycles[c].id + ".";
    names.push_back(d.cycles[c].id);
    const auto [u0, u] = frame.split(q.projection.col(c));
    AffineIsometry dual = dual_affine_reflection(frame, u0, u, op.lambda);
    bool same = false;
    try {
      same = dual == pullback(frame, op.matrix).inverse();
    } catch (const AffineError&) {
    }
    rep.add(p + "pullback", "dual reflection is the action of the inverse operator on cocycles", same);
    rep.add(p + "conj_form", "linear part preserves the conjugate form", preserves_conj_form(dual.linear, frame.q));
    const Vector mirror_point = scale(-(opt.alpha0 * u0) / herm_eval(frame.q, u, u), conj(u));
    const Matrix diff = dual.linear - Matrix::identity(frame.n);
    rep.add(p + "reflection",
            "affine reflection with root conj(u), eigenvalue conj(lambda), fixed mirror; linear iff u0 = 0",
            dual.apply(mirror_point) == mirror_point && diff.rank() == 1 &&
                dual.linear * conj(u) == scale(op.lambda.conj(), conj(u)) && (dual.is_linear() == u0.is_zero()),
            {{"u0", to_string(u0)}, {"translation", to_string(dual.translation)}});
    out.duals.push_back(std::move(dual));
  }
  {
    bool ok = true;
    for (std::size_t a = 0; a < ops.size() && ok; ++a)
      for (std::size_t b = 0; b < ops.size() && ok; ++b)
        ok = pullback(frame, ops[a].matrix * ops[b].matrix) ==
             pullback(frame, ops[b].matrix) * pullback(frame, ops[a].matrix);
    rep.add("contravariance", "the cocycle action of h h' is that of h' followed by h", ok);
  }

  const ReferenceGroup* ref = nullptr;
  try {
    ref = &reference_group(d.expected_group);
  } catch (const UnknownName& e) {
    rep.add("reference", "expected group is an embedded reference group", false, e.what());
    return out;
  }
  const auto& ref_group = reference_closure(ref->name, std::max<std::size_t>(opt.max_group, ref->literature_order));
  std::vector<Matrix> lin;
  for (const auto& g : out.duals) lin.push_back(g.linear);
  try {
    out.linear_group = linear_closure(lin, opt.max_group, opt.exec);
  } catch (const ClosureError& e) {
    rep.add("linear.order", "linear parts generate a finite group of the reference order", false, e.what());
    return out;
  }
  rep.add("linear.order", "linear parts generate a finite group of the reference order",
          out.linear_group.size() == ref_group.size() && frame.n == ref->dim,
          {{"order", out.linear_group.size()}, {"reference", ref->name}, {"reference_order", ref_group.size()}});
  {
    std::vector<Matrix> pure;
    for (const auto& g : out.duals)
      if (g.is_linear()) pure.push_back(g.linear);
    std::size_t order = 0;
    try {
      if (!pure.empty()) order = linear_closure(pure, opt.max_group, opt.exec).size();
    } catch (const ClosureError&) {
    }
    rep.add("linear.pure", "the linear generators alone realise L with zero translation",
            order == out.linear_group.size(), {{"generators", pure.size()}, {"order", order}});
  }
  const auto prof = reflection_profile(out.linear_group), ref_prof = reflection_profile(ref_group);
  rep.add("linear.profile", "reflection orders match the reference group", prof == ref_prof,
          {{"profile", profile_json(prof)}, {"reference", profile_json(ref_prof)}});

  const Vector t0 = out.duals.at(0).translation;
  std::vector<Vector> orbit;
  for (const auto& a : out.linear_group) orbit.push_back(a * t0);
  ZLattice t = lattice_from_generators(orbit, frame.n);
  out.lattice = t;
  {
    bool ok = false;
    nlohmann::json w{{"t0", to_string(t0)}};
    if (ref->rule == ReferenceGroup::Rule::ring) {
      std::vector<Vector> gens;
      for (const auto& b : ref->ring_basis) gens.push_back(scale(b, t0));
      ok = frame.n == 1 && t == lattice_from_generators(gens, frame.n);
      w["rule"] = "t0 times the ring of integers";
    } else {
      const int k = root_order(out.linear_group, t0);
      ok = !is_zero(t0) && k == ref->designated_order;
      w["rule"] = "span of the L-orbit of a root";
      w["root_order"] = k;
      w["required_order"] = ref->designated_order;
    }
    w["lattice"] = lattice_json(t);
    rep.add("lattice.rule", "candidate lattice follows the rule of the reference group", ok, w);
  }
  rep.add("lattice.full_rank", "candidate lattice has full rank 2n in C^n", is_full_complex_lattice(t),
          {{"rank", t.rank()}, {"n", frame.n}});
  const LatticeVerdicts lv = translation_subgroup(out.duals, t, opt);
  rep.add("lattice.invariance", "L preserves the lattice", lv.invariance);
  rep.add("lattice.containment", "every group element has translation in the lattice", lv.containment,
          lv.containment_witness);
  rep.add("lattice.fullness", "pure translations of bounded words span the lattice", lv.fullness, lv.fullness_witness);

  if (d.maximal_root) {
    const auto mr = maximal_root_check(d);
    rep.add("maximal_root", "kernel correction a is a word in the generators applied to a root", mr.holds,
            {{"value", to_string(mr.value)}, {"target", to_string(mr.target)}});
  }
  return out;
}

Report verify_reference_group(const std::string& name, const CrystOptions& opt) {
  const ReferenceGroup& g = reference_group(name);
  Report rep("reference", name);
  const HermitianGram std_form(Matrix::identity(g.dim));
  bool refl = true;
  for (const auto& m : g.generators)
    refl = refl && (m - Matrix::identity(g.dim)).rank() == 1 && preserves_form(m, std_form);
  rep.add("generators", "generators are unitary reflections", refl);
  std::vector<Matrix> group;
  try {
    group = linear_closure(g.generators, std::max<std::size_t>(opt.max_group, g.literature_order), opt.exec);
  } catch (const ClosureError& e) {
    rep.add("order", "closure order equals the literature order", false, e.what());
    return rep;
  }
  rep.add("order", "closure order equals the literature order",
          static_cast<int>(group.size()) == g.literature_order,
          {{"order", group.size()}, {"literature", g.literature_order}, {"provenance", g.provenance}});
  rep.add("profile", "reflection orders", true, profile_json(reflection_profile(group)));
  rep.add("designated_root", "designated root is a root of a reflection in the group", g.designated_order > 0,
          {{"root", to_string(g.designated_root)}, {"order", g.designated_order}});
  bool inv = true;
  for (const auto& m : g.generators) inv = inv && g.lattice.image(m) == g.lattice;
  rep.add("lattice.invariance", "lattice is invariant", inv, lattice_json(g.lattice));
  rep.add("lattice.full_rank", "lattice has full rank", is_full_complex_lattice(g.lattice), {{"rank", g.lattice.rank()}});
  return rep;
}

}  // namespace p8

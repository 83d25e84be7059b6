#include <doctest.h>

#include "oracle.hpp"
#include "p8cryst/affine.hpp"

using namespace p8;

namespace {

const char* const kNames[] = {"D4_3", "C3_33", "P8Z6_prime", "P8Z6_dblprime",
                              "P8_Z3", "C3_24", "P8divZ6", "P8divZ4"};

struct Setup {
  DiagramSpec d;
  Quotient q;
  std::vector<PLOperator> ops;
  DualFrame f;
};

Setup setup(const std::string& name, ChiChoice chi = ChiChoice::primary, CycloNum alpha0 = CycloNum(1)) {
  Setup s{diagram_for(name, chi), {}, {}, {}};
  s.q = quotient_basis(s.d, reconcile(s.d).gram);
  s.ops = diagram_operators(s.d, s.q);
  s.f = DualFrame::build(s.q.gram, s.d.kernel_vector, alpha0);
  return s;
}

AffineIsometry dual_of(const Setup& s, std::size_t c) {
  const auto [u0, u] = s.f.split(s.q.projection.col(c));
  return dual_affine_reflection(s.f, u0, u, s.ops[c].lambda);
}

Matrix m1(const char* x) { return Matrix::from_rows({Vector{parse_cyclo(x)}}); }

}  // namespace

TEST_CASE("affine composition law") {
  const AffineIsometry a{m1("w"), Vector{CycloNum(1)}}, b{m1("i"), Vector{parse_cyclo("w")}};
  const Vector x{parse_cyclo("2 - i")};
  CHECK((a * b).apply(x) == a.apply(b.apply(x)));
  CHECK((a * a.inverse()) == AffineIsometry::identity(1));
  CHECK(conj(a * b) == conj(a) * conj(b));
}

TEST_CASE("dual reflections: linear iff u0 = 0, mirror fixed, pullback inverse") {
  for (const char* n : kNames)
    for (auto chi : {ChiChoice::primary, ChiChoice::conj}) {
      CAPTURE(n);
      const Setup s = setup(n, chi);
      for (std::size_t c = 0; c < s.ops.size(); ++c) {
        const auto [u0, u] = s.f.split(s.q.projection.col(c));
        const AffineIsometry d = dual_of(s, c);
        CHECK(d.is_linear() == u0.is_zero());
        CHECK(preserves_conj_form(d.linear, s.f.q));
        const Vector p = scale(-(u0 * s.f.alpha0) / herm_eval(s.f.q, u, u), conj(u));
        CHECK(d.apply(p) == p);
        CHECK(d.linear.det() == s.ops[c].lambda.conj());
        CHECK(d == pullback(s.f, s.ops[c].matrix).inverse());
      }
    }
}

TEST_CASE("the cocycle action is contravariant") {
  for (const char* n : kNames) {
    const Setup s = setup(n);
    for (std::size_t a = 0; a < s.ops.size(); ++a)
      for (std::size_t b = 0; b < s.ops.size(); ++b)
        CHECK(pullback(s.f, s.ops[a].matrix * s.ops[b].matrix) ==
              pullback(s.f, s.ops[b].matrix) * pullback(s.f, s.ops[a].matrix));
  }
}

TEST_CASE("dual reflection preconditions") {
  const Setup s = setup("P8Z6_prime");
  CHECK_THROWS_AS(dual_affine_reflection(s.f, CycloNum(1), zero_vector(1), parse_cyclo("w")), AffineError);
  CHECK_THROWS_AS(dual_affine_reflection(s.f, CycloNum(1), unit_vector(1, 0), CycloNum(1)), AffineError);
  CHECK_THROWS_AS(DualFrame::build(s.q.gram, s.d.kernel_vector, CycloNum(0)), AffineError);
  CHECK_THROWS_AS(DualFrame::build(s.q.gram, Vector{CycloNum(1), CycloNum(2)}), AffineError);
}

TEST_CASE("omitted root of the double-prime dataset gives a rank-2 translation module") {
  const Setup s = setup("P8Z6_dblprime");
  const AffineIsometry d0 = dual_of(s, 0), d1 = dual_of(s, 1);
  CHECK_FALSE(d0.is_linear());
  CHECK(d1.is_linear());
  ZLattice w(1);
  AffineIsometry p = AffineIsometry::identity(1);
  for (int k = 0; k < 6; ++k) {
    const AffineIsometry t = p * d0 * p.inverse() * d0.inverse();
    CHECK(t.linear.is_identity());
    w.add(t.translation);
    p = p * d1;
  }
  CHECK(w.rank() == 2);
  CHECK(is_full_complex_lattice(w));
}

TEST_CASE("reference group orders agree with a floating-point closure") {
  const std::map<std::string, std::size_t> expected{{"K3_3", 3}, {"K3_4", 4},  {"K3_6", 6},  {"G312", 18},
                                                    {"K5", 72},  {"K8", 96}, {"K25", 648}};
  CHECK(reference_group_names().size() == 7);
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    const auto& g = reference_group(name);
    std::vector<oracle::CMat> gens;
    for (const auto& m : g.generators) gens.push_back(oracle::embed(m));
    CHECK(oracle::complex_group_order(gens) == order);
    CHECK(linear_closure(g.generators, 2000).size() == order);
    CHECK(verify_reference_group(name).overall() == Verdict::pass);
  }
  CHECK_THROWS_AS(reference_group("K7"), UnknownName);
  const auto& k36 = reference_group("K3_6");
  CHECK(k36.generators[0] == m1("-conj(w)"));
  CHECK(k36.lattice == lattice_from_generators({Vector{CycloNum(1)}, Vector{parse_cyclo("w")}}, 1));
  CHECK(reference_group("G312").designated_order == 2);
}

TEST_CASE("translation subgroup verdicts on constructed examples") {
  const ZLattice zw = lattice_from_generators({Vector{CycloNum(1)}, Vector{parse_cyclo("w")}}, 1);
  const AffineIsometry rot{m1("w"), Vector{CycloNum(0)}};
  CrystOptions opt;
  SUBCASE("crystallographic") {
    const auto v = translation_subgroup({rot, AffineIsometry::pure_translation(Vector{CycloNum(1)})}, zw, opt);
    CHECK(v.invariance == Verdict::pass);
    CHECK(v.containment == Verdict::pass);
    CHECK(v.fullness == Verdict::pass);
  }
  SUBCASE("non-crystallographic translation") {
    const auto v = translation_subgroup({rot, AffineIsometry::pure_translation(Vector{parse_cyclo("e9")})}, zw, opt);
    CHECK(v.containment == Verdict::fail);
  }
  SUBCASE("translations too coarse") {
    const auto v = translation_subgroup({rot, AffineIsometry::pure_translation(Vector{CycloNum(2)})}, zw, opt);
    CHECK(v.containment == Verdict::pass);
    CHECK(v.fullness == Verdict::fail);
  }
  SUBCASE("lattice not invariant") {
    const ZLattice z = lattice_from_generators({Vector{CycloNum(1)}}, 1);
    CHECK(translation_subgroup({rot}, z, opt).invariance == Verdict::fail);
  }
  SUBCASE("state cap gives inconclusive") {
    opt.bfs_cap = 2;
    const auto v = translation_subgroup({rot, AffineIsometry::pure_translation(Vector{CycloNum(1)})}, zw, opt);
    CHECK(v.containment == Verdict::inconclusive);
  }
}

TEST_CASE("maximal-root identities") {
  const std::map<std::string, Vector> a{
      {"C3_33", {CycloNum(0), parse_cyclo("1 - conj(w)"), CycloNum(1)}},
      {"D4_3", {CycloNum(0), parse_cyclo("1 - conj(w)"), CycloNum(1), CycloNum(1)}},
      {"P8_Z3", {CycloNum(0), parse_cyclo("conj(w) - w"), parse_cyclo("-w")}},
      {"C3_24", {CycloNum(0), parse_cyclo("1 + i"), parse_cyclo("i")}}};
  for (const auto& [name, target] : a) {
    CAPTURE(name);
    const auto r = maximal_root_check(builtin_diagram(name));
    CHECK(r.holds);
    CHECK(r.value == target);
    const auto rc = maximal_root_check(diagram_for(name, ChiChoice::conj));
    CHECK(rc.holds);
    CHECK(rc.value == conj(target));
    // Identity word: the bare root is not the correction vector.
    DiagramSpec d = builtin_diagram(name);
    d.maximal_root->word.clear();
    d.maximal_root->scalar = CycloNum(1);
    CHECK_FALSE(maximal_root_check(d).holds);
  }
  CHECK_THROWS_AS(maximal_root_check(builtin_diagram("P8divZ6")), AffineError);
}

TEST_CASE("crystallographic identification for every dataset") {
  for (const char* n : kNames)
    for (auto chi : {ChiChoice::primary, ChiChoice::conj}) {
      CAPTURE(n);
      const auto an = analyze_crystallographic(diagram_for(n, chi));
      for (const auto& c : an.report.checks()) {
        CAPTURE(c.claim_id);
        CHECK(c.verdict == Verdict::pass);
      }
    }
}

TEST_CASE("serial and parallel analyses agree") {
  CrystOptions s, p;
  s.exec = Exec::serial;
  p.exec = Exec::parallel;
  const DiagramSpec d = builtin_diagram("C3_24");
  CHECK(analyze_crystallographic(d, s).report.to_json() == analyze_crystallographic(d, p).report.to_json());
}

TEST_CASE("dilation of alpha0 scales the lattice") {
  const CycloNum alpha = parse_cyclo("1 - w");
  for (const char* n : kNames) {
    CAPTURE(n);
    CrystOptions o;
    o.alpha0 = alpha;
    const auto a = analyze_crystallographic(builtin_diagram(n));
    const auto b = analyze_crystallographic(builtin_diagram(n), o);
    CHECK(b.report.overall() == Verdict::pass);
    REQUIRE(a.lattice.has_value());
    REQUIRE(b.lattice.has_value());
    CHECK(*b.lattice == a.lattice->scaled(alpha));
    CHECK(a.linear_group.size() == b.linear_group.size());
  }
}

TEST_CASE("reflection profile") {
  const auto g = linear_closure(reference_group("G312").generators, 100);
  const auto p = reflection_profile(g);
  // G(3,1,2): 3 swaps-type involutions, 4 reflections of order 3.
  CHECK(p.at(2) == 3);
  CHECK(p.at(3) == 4);
}

#pragma once

// Dual affine reflections on the hyperplane of cocycles with fixed value on
// the kernel generator, and checks that they generate L x| T.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "p8cryst/closure.hpp"
#include "p8cryst/lattice.hpp"
#include "p8cryst/linalg.hpp"
#include "p8cryst/monodromy.hpp"
#include "p8cryst/report.hpp"

namespace p8 {

class AffineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// x -> linear * x + translation
struct AffineIsometry {
  Matrix linear;
  Vector translation;

  static AffineIsometry identity(std::size_t n);
  static AffineIsometry pure_linear(Matrix a);
  static AffineIsometry pure_translation(Vector t);

  std::size_t dim() const noexcept { return linear.rows(); }
  bool is_linear() const { return is_zero(translation); }
  Vector apply(const Vector& x) const;
  AffineIsometry inverse() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const AffineIsometry& a, const AffineIsometry& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
  friend bool operator!=(const AffineIsometry& a, const AffineIsometry& b) { return !(a == b); }
};

// (a * b)(x) = a(b(x))
AffineIsometry operator*(const AffineIsometry& a, const AffineIsometry& b);
AffineIsometry conj(const AffineIsometry& a);

struct AffineHash {
  std::size_t operator()(const AffineIsometry& a) const noexcept { return a.hash(); }
};

// Basis e0' = e0 + a, e1..en of the quotient space with e0' spanning the
// radical; Q is the (negative definite) form on e1..en.
struct DualFrame {
  std::size_t tau = 0;
  std::size_t n = 0;
  HermitianGram q;
  Vector a;
  CycloNum alpha0;

  static DualFrame build(const HermitianGram& quotient_gram, const Vector& kernel_vector,
                         const CycloNum& alpha0 = CycloNum(1));
  // c = c0 e0' + u
  std::pair<CycloNum, Vector> split(const Vector& c) const;
  // Matrix of m in the frame basis.
  Matrix to_frame(const Matrix& m) const;
};

// alpha -> alpha - (1 - conj(lambda)) (alpha0 u0 + qbar(alpha, ubar)) / qbar(ubar, ubar) * ubar
AffineIsometry dual_affine_reflection(const DualFrame& f, const CycloNum& u0, const Vector& u,
                                      const CycloNum& lambda);
// Action alpha~ -> alpha~ o m on the hyperplane; m must fix the kernel generator.
AffineIsometry pullback(const DualFrame& f, const Matrix& m);

// Linear part preserves qbar, whose matrix is Q^T.
bool preserves_conj_form(const Matrix& a, const HermitianGram& q);

struct ReferenceGroup {
  std::string name;
  std::size_t dim = 0;
  std::vector<Matrix> generators;
  std::vector<nlohmann::json> generator_sources;  // as written in the data file
  Vector designated_root;
  int designated_order = 0;  // order of the reflection with the designated root
  ZLattice lattice{1};
  int literature_order = 0;
  std::string provenance;
  enum class Rule { ring, orbit } rule = Rule::orbit;
  std::vector<CycloNum> ring_basis;  // rank-1 groups: T = t * span(ring_basis)
};

const std::vector<std::string>& reference_group_names();
// Throws UnknownName.
const ReferenceGroup& reference_group(const std::string& name);

// order -> number of reflections (rank(A - I) = 1) of that order
std::map<int, int> reflection_profile(const std::vector<Matrix>& group);
nlohmann::json profile_json(const std::map<int, int>& p);

struct CrystOptions {
  CycloNum alpha0 = CycloNum(1);
  std::size_t word_bound = 12;
  std::size_t bfs_cap = 1000000;
  std::size_t max_group = 2000;
  Exec exec = Exec::parallel;
};

struct LatticeVerdicts {
  Verdict invariance = Verdict::fail;
  Verdict containment = Verdict::fail;
  Verdict fullness = Verdict::fail;
  nlohmann::json containment_witness;
  nlohmann::json fullness_witness;
};

// Invariance, containment (BFS over (A, t mod T)) and fullness (translations
// of identity-linear words of length <= word_bound span T).
LatticeVerdicts translation_subgroup(const std::vector<AffineIsometry>& gens, const ZLattice& t,
                                     const CrystOptions& opt);

struct MaximalRootResult {
  bool holds = false;
  Vector value;
  Vector target;
};
// scalar * word(e_root) == (0, a) on the quotient coordinates.
MaximalRootResult maximal_root_check(const DiagramSpec& d);

struct CrystAnalysis {
  Report report;
  std::vector<AffineIsometry> duals;
  std::vector<Matrix> linear_group;
  std::optional<ZLattice> lattice;
};

CrystAnalysis analyze_crystallographic(const DiagramSpec& d, const CrystOptions& opt = {});
inline Report verify_crystallographic(const DiagramSpec& d, const CrystOptions& opt = {}) {
  return analyze_crystallographic(d, opt).report;
}

// Self-consistency of an embedded reference group.
Report verify_reference_group(const std::string& name, const CrystOptions& opt = {});

}  // namespace p8

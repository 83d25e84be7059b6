#pragma once

// Dynkin-diagram datasets of vanishing chi-cycles and their
// Picard-Lefschetz operators.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "p8cryst/linalg.hpp"
#include "p8cryst/report.hpp"

namespace p8 {

class MonodromyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ChiChoice { primary, conj };

struct CycleSpec {
  std::string id;
  std::string label;
  mpq_class self;
  int order = 0;
  std::string lambda_expr;  // may use the bound variable chi
};

struct EdgeSpec {
  std::string from;
  std::string to;
  std::vector<CycloNum> values;  // declared value first, then alternatives
  std::optional<int> braid;
};

struct MaximalRootSpec {
  CycloNum scalar;
  std::vector<std::string> word;  // written left to right, applied right to left
  std::string root;
};

struct DiagramSpec {
  std::string name;
  Subring ring = Subring::Z_omega;
  std::array<CycloNum, 2> kernel_chi;  // (chi, conj chi); chi is the active character
  std::vector<CycleSpec> cycles;
  std::vector<EdgeSpec> edges;
  std::optional<Vector> relation;  // over cycles
  Vector kernel_vector;            // over the quotient basis, leading entry 1
  std::string omitted_root;
  std::string expected_group;
  int tau = 0;
  std::vector<std::string> monodromy_order;  // product order for the classical monodromy
  std::optional<MaximalRootSpec> maximal_root;
  bool conjugated = false;

  const CycloNum& chi() const { return kernel_chi[0]; }
  std::size_t index_of(const std::string& id) const;
  CycloNum lambda(std::size_t k) const;
  std::vector<CycloNum> lambdas() const;
};

DiagramSpec diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const DiagramSpec& d);

const std::vector<DiagramSpec>& builtin_diagrams();
const DiagramSpec& builtin_diagram(const std::string& name);
// Dataset for the conjugate kernel character: entry-wise conjugation.
DiagramSpec conjugate_spec(const DiagramSpec& d);
DiagramSpec diagram_for(const std::string& name, ChiChoice chi);

struct EdgeChoice {
  std::size_t option = 0;  // index into EdgeSpec::values
  bool flipped = false;    // value placed at <to, from> instead of <from, to>
};

struct ConcreteGram {
  HermitianGram gram;
  std::vector<EdgeChoice> choices;
  std::size_t candidates_tried = 0;
};

class ReconcileFailure : public MonodromyError {
 public:
  ReconcileFailure(const std::string& diagram, std::string constraint)
      : MonodromyError("reconcile failed for " + diagram + ": violated " + constraint),
        constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

HermitianGram gram_for_choices(const DiagramSpec& d, const std::vector<EdgeChoice>& choices);
// Name of the first violated constraint, or empty if the Gram is admissible.
std::string first_violation(const DiagramSpec& d, const HermitianGram& g);
// Lexicographic search over (edge, value option, orientation); cached.
ConcreteGram reconcile(const DiagramSpec& d);
nlohmann::json describe_choices(const DiagramSpec& d, const ConcreteGram& c);

struct Quotient {
  HermitianGram gram;          // tau x tau
  Matrix projection;           // tau x k, column c = image of cycle c
  std::optional<std::size_t> dropped;
};

Quotient quotient_basis(const DiagramSpec& d, const HermitianGram& g);

struct PLOperator {
  Matrix matrix;
  Vector root;
  CycloNum lambda;
  std::string root_id;
};

// h(c) = c - (1 - lambda) <c, e> e / <e, e>, as a matrix on column coordinates.
PLOperator pl_operator(const HermitianGram& g, const Vector& root, const CycloNum& lambda);

// Operators of every cycle in the quotient basis, in cycle order.
std::vector<PLOperator> diagram_operators(const DiagramSpec& d, const Quotient& q);

// Alternating words of the given length agree (2 means AB = BA).
bool check_braid(const Matrix& a, const Matrix& b, int length);

Matrix classical_monodromy(const DiagramSpec& d, const std::vector<PLOperator>& ops);
Matrix classical_monodromy(const DiagramSpec& d);

// (h1 h0 h2 h0)^2 = (h0 h2 h0 h1)^2
bool extra_relation_P8Z3(const Matrix& h0, const Matrix& h1, const Matrix& h2);

struct FoldResult {
  std::vector<Vector> basis;  // orbit basis in the original cycle space
  HermitianGram gram;
  std::vector<CycloNum> lambdas;
  Vector kernel_vector;
};

// Restrict a 4-cycle dataset to the span of the fixed cycles and
// (e_a + sign e_b). Throws MonodromyError naming the violated constraint.
FoldResult fold(const DiagramSpec& d, const std::string& swap_a, const std::string& swap_b, int sign);

Report verify_diagram(const DiagramSpec& d);

}  // namespace p8

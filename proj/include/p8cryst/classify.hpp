#pragma once

// Character arithmetic for diagonal symmetries of cubic forms.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "p8cryst/cyclo.hpp"
#include "p8cryst/report.hpp"

namespace p8 {

class ClassifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Monomial {
  std::array<int, 3> exp{};  // powers of x, y, z
  int degree() const { return exp[0] + exp[1] + exp[2]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// "1", "x", "x*y^2", "y^2*z", ...
Monomial parse_monomial(std::string_view text);
std::string to_string(const Monomial& m);

// g: (x, y, z) -> (kx x, ky y, kz z).
using DiagonalSymmetry = std::array<CycloNum, 3>;

DiagonalSymmetry parse_symmetry(const std::vector<std::string>& kappas);
DiagonalSymmetry inverse(const DiagonalSymmetry& g);
DiagonalSymmetry power(const DiagonalSymmetry& g, long k);

CycloNum monomial_character(const Monomial& m, const DiagonalSymmetry& g);

// Each basis entry is a representative followed by equivalent alternates
// in the local ring (e.g. y^2 ~ z^2).
using MonomialBasis = std::vector<std::vector<Monomial>>;

struct SymmetryCase {
  std::string name;
  std::string notation;
  std::vector<Monomial> f;  // cubic support; coefficients play no role
  DiagonalSymmetry g;
  MonomialBasis basis;
  struct Expected {
    int order = 0;
    std::vector<Monomial> versal;
    std::optional<std::pair<CycloNum, CycloNum>> kernel_chi;
    std::optional<std::string> affine_group;
  } expected;
};

// c with f o g = c f; throws ClassifyError("not equivariant") otherwise.
CycloNum equivariance_factor(const std::vector<Monomial>& f, const DiagonalSymmetry& g);
std::optional<CycloNum> try_equivariance_factor(const std::vector<Monomial>& f, const DiagonalSymmetry& g);

// lcm of the orders of kx, ky, kz.
int symmetry_order(const DiagonalSymmetry& g);

// Indices of basis entries whose character equals c.
std::vector<std::size_t> versal_indices(const SymmetryCase& c);
std::vector<Monomial> versal_monomials(const SymmetryCase& c);

// Character of w = dx^dy^dz/df: kx ky kz / c.
CycloNum form_character(const SymmetryCase& c);
// (chi_w, conj(chi_w)) when chi_w is one of +-i, +-w, +-conj(w).
std::optional<std::pair<CycloNum, CycloNum>> kernel_characters(const SymmetryCase& c);

bool is_smoothable(const SymmetryCase& c);

// Number of basis sections phi_i * w with character chi.
int character_multiplicity(const SymmetryCase& c, const CycloNum& chi);

// Basis entry index matching a monomial (representative or alternate).
std::optional<std::size_t> basis_index(const MonomialBasis& basis, const Monomial& m);

SymmetryCase symmetry_case_from_json(const nlohmann::json& row, const nlohmann::json& families);
std::vector<SymmetryCase> table1_cases();
const SymmetryCase& table1_case(const std::string& name);

struct ProjRow {
  int row = 0;
  std::vector<Monomial> f;
  DiagonalSymmetry kappa;
  MonomialBasis basis;
  bool splits_kernel = false;
};
std::vector<ProjRow> proj_rows();

Report verify_table1_row(const SymmetryCase& c);
Report verify_table1();
Report verify_proj_row(const ProjRow& r);
Report verify_proj_rows();

}  // namespace p8

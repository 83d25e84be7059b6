#pragma once

// Exact arithmetic in a cyclotomic field Q(zeta_N).
//
// Elements are stored in the power basis of Q[x]/Phi_N(x) as integer
// numerators over a single positive common denominator. The representation
// is canonical (gcd of numerators and denominator is 1), so equality and
// hashing are coefficient-wise.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace p8 {

class CycloError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conductor used when nothing else is specified: lcm of every root-of-unity
// order that shows up in the symmetry tables (3, 4, 8, 9, 12).
inline constexpr int kDefaultConductor = 72;

class CyclotomicField {
 public:
  // Fields are interned; the returned reference lives for the whole program.
  static const CyclotomicField& get(int conductor);

  int conductor() const noexcept { return conductor_; }
  int degree() const noexcept { return degree_; }

  // Phi_N, coefficients low to high, monic.
  const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }

  // Power-basis coordinates of x^k for 0 <= k < N.
  const std::vector<mpz_class>& power(int k) const;

  // Z-basis of Z[zeta_N] made of products of prime-power roots of unity
  // zeta_{q}^{b}, b < phi(q). Column j of the change matrix holds the power
  // basis coordinates of tensor basis element j.
  const std::vector<std::vector<mpz_class>>& tensor_to_power() const noexcept {
    return tensor_to_power_;
  }
  const std::vector<std::vector<mpz_class>>& power_to_tensor() const noexcept {
    return power_to_tensor_;
  }
  // Display name of tensor basis element j ("1", "w", "i*e8", ...). Empty
  // names mean the conductor has no symbolic names and z^k is used instead.
  const std::string& tensor_name(int j) const { return tensor_names_.at(j); }
  bool has_symbolic_names() const noexcept { return symbolic_; }

  // Reduces a polynomial (arbitrary length) modulo Phi_N in place; the
  // result has exactly degree() coefficients.
  void reduce(std::vector<mpz_class>& poly) const;

 private:
  explicit CyclotomicField(int conductor);

  int conductor_;
  int degree_;
  std::vector<mpz_class> modulus_;
  std::vector<std::pair<int, mpz_class>> modulus_terms_;  // nonzero, below leading
  std::vector<std::vector<mpz_class>> powers_;
  std::vector<std::vector<mpz_class>> tensor_to_power_;
  std::vector<std::vector<mpz_class>> power_to_tensor_;
  std::vector<std::string> tensor_names_;
  bool symbolic_ = false;
};

// Computes Phi_n by exact division of x^n - 1 by Phi_d for proper divisors d.
std::vector<mpz_class> cyclotomic_polynomial(int n);

int euler_phi(int n);

class CycloNum {
 public:
  // Zero in the default field.
  CycloNum();
  explicit CycloNum(const CyclotomicField& field);
  // Integer and rational constants in the default field.
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  CycloNum(const mpq_class& value, const CyclotomicField& field);
  CycloNum(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  // zeta_N^k.
  static CycloNum zeta_power(const CyclotomicField& field, long k);

  const CyclotomicField& field() const noexcept { return *field_; }
  int conductor() const noexcept { return field_->conductor(); }

  const std::vector<mpz_class>& numerators() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }
  mpq_class coeff(int k) const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  // Precondition: is_rational().
  mpq_class to_rational() const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  CycloNum operator-() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  CycloNum inverse() const;
  CycloNum pow(long exponent) const;
  // Complex conjugation zeta -> zeta^{-1}.
  CycloNum conj() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycloNum galois(int k) const;

  // Diagnostic floating embedding with zeta -> exp(2 pi i k / N).
  std::complex<double> to_complex(int primitive_power = 1) const;

  std::size_t hash() const noexcept;

  // Coordinates in the tensor Z-basis (see CyclotomicField), as rationals.
  std::vector<mpq_class> tensor_coordinates() const;
  static CycloNum from_tensor_coordinates(const CyclotomicField& field,
                                          const std::vector<mpq_class>& coords);

 private:
  CycloNum(const CyclotomicField* field, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  void require_same_field(const CycloNum& other) const;

  const CyclotomicField* field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

struct CycloHash {
  std::size_t operator()(const CycloNum& x) const noexcept { return x.hash(); }
};

// zeta_k^power, requires k | N.
CycloNum root_of_unity(int k, long power,
                       const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));

// Multiplicative order of x if it is a root of unity, 0 otherwise.
int root_of_unity_order(const CycloNum& x);

enum class Subring { Z, Z_i, Z_omega };

bool subring_member(const CycloNum& a, Subring ring);

// Value grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | symbol | 'conj' '(' expr ')' | '(' expr ')'
// Symbols: w, i, e8, e9, z (zeta_N) and any bound variable (e.g. chi).
using Bindings = std::map<std::string, CycloNum, std::less<>>;

CycloNum parse_cyclo(std::string_view text,
                     const CyclotomicField& field = CyclotomicField::get(kDefaultConductor),
                     const Bindings& bindings = {});

// Canonical string in the same grammar; parse_cyclo(to_string(x)) == x.
std::string to_string(const CycloNum& x);

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

}  // namespace p8

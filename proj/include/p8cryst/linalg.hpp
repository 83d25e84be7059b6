#pragma once

// Dense exact matrices over Q(zeta_N) and hermitian Gram matrices.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "p8cryst/cyclo.hpp"

namespace p8 {

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vector = std::vector<CycloNum>;

Vector zero_vector(std::size_t n, const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));
Vector unit_vector(std::size_t n, std::size_t k,
                   const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));
Vector conj(const Vector& v);
Vector scale(const CycloNum& c, const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols,
         const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));
  static Matrix identity(std::size_t n,
                         const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));
  // Rows of equal length; throws on ragged input.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  CycloNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const { return conj().transpose(); }
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycloNum& c, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(long k) const;
  Matrix inverse() const;
  CycloNum det() const;
  std::size_t rank() const;
  bool is_identity() const;

  // Basis of {x : A x = 0}.
  std::vector<Vector> nullspace() const;

  std::size_t hash() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept { return m.hash(); }
};

std::string to_string(const Matrix& m);

// Hermitian matrix of a form that is linear in the first argument:
// <u, v> = u^T G conj(v).
class HermitianGram {
 public:
  HermitianGram() = default;
  // Throws LinalgError unless m is square and m = conj(m)^T exactly.
  explicit HermitianGram(Matrix m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const CycloNum& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  // Restriction to the span of the given vectors (Gram of the family).
  HermitianGram restrict_to(const std::vector<Vector>& basis) const;

 private:
  Matrix m_;
};

CycloNum herm_eval(const HermitianGram& g, const Vector& u, const Vector& v);

// Basis of {v : G conj(v) = 0}, the radical of the form.
std::vector<Vector> kernel(const HermitianGram& g);
std::size_t rank(const HermitianGram& g);
// All principal minors of -G are >= 0 (minors of a hermitian matrix are rational).
bool is_negative_semidefinite(const HermitianGram& g);

// M^T G conj(M) == G, i.e. the column action of M preserves the form.
bool preserves_form(const Matrix& m, const HermitianGram& g);

}  // namespace p8

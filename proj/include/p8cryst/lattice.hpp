#pragma once

// Finitely generated Z-submodules of Q(zeta_N)^n.
//
// Vectors are flattened to n * phi(N) rational coordinates in the tensor
// Z-basis of each field entry; the module is kept as an integer Hermite
// normal form at a common denominator scale.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "p8cryst/linalg.hpp"

namespace p8 {

using RationalVector = std::vector<mpq_class>;

RationalVector flatten(const Vector& v);
Vector unflatten(const RationalVector& flat, const CyclotomicField& field);

class ZLattice {
 public:
  ZLattice(std::size_t ambient_dim,
           const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));
  static ZLattice from_generators(const std::vector<Vector>& generators, std::size_t ambient_dim,
                                  const CyclotomicField& field = CyclotomicField::get(kDefaultConductor));

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t flat_dim() const noexcept { return n_ * static_cast<std::size_t>(field_->degree()); }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full_rank() const noexcept { return rank() == flat_dim(); }
  const mpz_class& scale() const noexcept { return scale_; }
  const CyclotomicField& field() const noexcept { return *field_; }

  // Returns true if the lattice grew.
  bool add(const Vector& v);
  bool add_flat(const RationalVector& v);

  bool contains(const Vector& v) const;
  bool contains_flat(const RationalVector& v) const;
  bool contains(const ZLattice& other) const;

  // Canonical coset representative of v modulo the lattice.
  RationalVector reduce_flat(RationalVector v) const;
  Vector reduce(const Vector& v) const;

  // Canonical Z-basis (rows of the rational HNF).
  std::vector<Vector> basis() const;
  std::vector<RationalVector> canonical() const;

  ZLattice image(const Matrix& a) const;
  ZLattice scaled(const CycloNum& c) const;

  friend bool operator==(const ZLattice& a, const ZLattice& b);
  friend bool operator!=(const ZLattice& a, const ZLattice& b) { return !(a == b); }

 private:
  void rescale(const mpz_class& new_scale);
  void insert(std::vector<mpz_class> v);
  void normalize();

  const CyclotomicField* field_;
  std::size_t n_;
  mpz_class scale_ = 1;
  // Integer HNF rows of scale_ * lattice, strictly increasing pivot columns.
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::size_t> pivots_;
};

ZLattice lattice_from_generators(const std::vector<Vector>& generators, std::size_t ambient_dim);
bool lattice_member(const ZLattice& l, const Vector& v);
bool lattice_equals(const ZLattice& a, const ZLattice& b);
// Rank 2n and R-spans C^n: det [B; conj(B)] != 0 for a Z-basis B.
bool is_full_complex_lattice(const ZLattice& l);

}  // namespace p8

#include "p8cryst/lattice.hpp"

namespace p8 {

namespace {

std::size_t leading(const std::vector<mpz_class>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RationalVector flatten(const Vector& v) {
  RationalVector out;
  for (const auto& x : v) {
    auto c = x.tensor_coordinates();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Vector unflatten(const RationalVector& flat, const CyclotomicField& field) {
  const std::size_t d = static_cast<std::size_t>(field.degree());
  if (flat.size() % d != 0) throw LinalgError("flattened vector length is not a multiple of the degree");
  Vector out;
  for (std::size_t i = 0; i < flat.size(); i += d)
    out.push_back(CycloNum::from_tensor_coordinates(
        field, RationalVector(flat.begin() + static_cast<std::ptrdiff_t>(i),
                              flat.begin() + static_cast<std::ptrdiff_t>(i + d))));
  return out;
}

ZLattice::ZLattice(std::size_t ambient_dim, const CyclotomicField& field)
    : field_(&field), n_(ambient_dim) {}

ZLattice ZLattice::from_generators(const std::vector<Vector>& generators, std::size_t ambient_dim,
                                   const CyclotomicField& field) {
  ZLattice l(ambient_dim, field);
  for (const auto& g : generators) l.add(g);
  return l;
}

void ZLattice::rescale(const mpz_class& new_scale) {
  if (new_scale == scale_) return;
  const mpz_class f = new_scale / scale_;
  for (auto& r : rows_)
    for (auto& x : r) x *= f;
  scale_ = new_scale;
}

bool ZLattice::add(const Vector& v) {
  if (v.size() != n_) throw LinalgError("lattice generator has wrong dimension");
  return add_flat(flatten(v));
}

bool ZLattice::add_flat(const RationalVector& v) {
  if (v.size() != flat_dim()) throw LinalgError("lattice generator has wrong dimension");
  if (contains_flat(v)) return false;
  mpz_class s = scale_;
  for (const auto& x : v) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), x.get_den_mpz_t());
  rescale(s);
  std::vector<mpz_class> iv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) iv[i] = v[i].get_num() * (scale_ / v[i].get_den());
  insert(std::move(iv));
  normalize();
  return true;
}

void ZLattice::insert(std::vector<mpz_class> v) {
  std::size_t k = 0;
  while (true) {
    const std::size_t lead = leading(v);
    if (lead == v.size()) return;
    while (k < rows_.size() && pivots_[k] < lead) ++k;
    if (k == rows_.size() || pivots_[k] > lead) {
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), lead);
      return;
    }
    // Same pivot: replace (row, v) by (g-row, remainder) via extended gcd.
    auto& row = rows_[k];
    const mpz_class a = row[lead], b = v[lead];
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const mpz_class ag = a / g, bg = b / g;
    std::vector<mpz_class> new_row(v.size()), rest(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      new_row[i] = s * row[i] + t * v[i];
      rest[i] = bg * row[i] - ag * v[i];
    }
    row = std::move(new_row);
    v = std::move(rest);
    ++k;
  }
}

void ZLattice::normalize() {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][pivots_[k]] < 0)
      for (auto& x : rows_[k]) x = -x;
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    const mpz_class& piv = rows_[k][p];
    for (std::size_t j = 0; j < k; ++j) {
      const mpz_class q = floor_div(rows_[j][p], piv);
      if (q == 0) continue;
      for (std::size_t i = p; i < rows_[j].size(); ++i) rows_[j][i] -= q * rows_[k][i];
    }
  }
  // Drop a common factor from the scale so the canonical data is unique.
  mpz_class g = scale_;
  for (const auto& r : rows_)
    for (const auto& x : r)
      if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& r : rows_)
      for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    scale_ /= g;
  }
}

bool ZLattice::contains_flat(const RationalVector& v) const {
  if (v.size() != flat_dim()) throw LinalgError("vector has wrong dimension");
  std::vector<mpz_class> iv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const mpq_class x = v[i] * scale_;
    if (x.get_den() != 1) return false;
    iv[i] = x.get_num();
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (leading(iv) < p) return false;
    if (iv[p] == 0) continue;
    if (!mpz_divisible_p(iv[p].get_mpz_t(), rows_[k][p].get_mpz_t())) return false;
    const mpz_class q = iv[p] / rows_[k][p];
    for (std::size_t i = p; i < iv.size(); ++i) iv[i] -= q * rows_[k][i];
  }
  return leading(iv) == iv.size();
}

bool ZLattice::contains(const Vector& v) const {
  if (v.size() != n_) throw LinalgError("vector has wrong dimension");
  return contains_flat(flatten(v));
}

bool ZLattice::contains(const ZLattice& other) const {
  if (other.n_ != n_ || other.field_ != field_) throw LinalgError("lattice dimension mismatch");
  for (const auto& b : other.canonical())
    if (!contains_flat(b)) return false;
  return true;
}

RationalVector ZLattice::reduce_flat(RationalVector v) const {
  if (v.size() != flat_dim()) throw LinalgError("vector has wrong dimension");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    const mpq_class piv(rows_[k][p], scale_);
    const mpq_class ratio = v[p] / piv;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    if (q == 0) continue;
    for (std::size_t i = p; i < v.size(); ++i) {
      mpq_class step(rows_[k][i] * q, scale_);
      step.canonicalize();
      v[i] -= step;
    }
  }
  return v;
}

Vector ZLattice::reduce(const Vector& v) const { return unflatten(reduce_flat(flatten(v)), *field_); }

std::vector<RationalVector> ZLattice::canonical() const {
  std::vector<RationalVector> out;
  for (const auto& r : rows_) {
    RationalVector q(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      q[i] = mpq_class(r[i], scale_);
      q[i].canonicalize();
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Vector> ZLattice::basis() const {
  std::vector<Vector> out;
  for (const auto& r : canonical()) out.push_back(unflatten(r, *field_));
  return out;
}

ZLattice ZLattice::image(const Matrix& a) const {
  ZLattice out(a.rows(), *field_);
  for (const auto& b : basis()) out.add(a * b);
  return out;
}

ZLattice ZLattice::scaled(const CycloNum& c) const {
  ZLattice out(n_, *field_);
  for (const auto& b : basis()) out.add(p8::scale(c, b));
  return out;
}

bool operator==(const ZLattice& a, const ZLattice& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.scale_ == b.scale_ && a.pivots_ == b.pivots_ &&
         a.rows_ == b.rows_;
}

ZLattice lattice_from_generators(const std::vector<Vector>& generators, std::size_t ambient_dim) {
  return ZLattice::from_generators(generators, ambient_dim);
}

bool lattice_member(const ZLattice& l, const Vector& v) { return l.contains(v); }

bool lattice_equals(const ZLattice& a, const ZLattice& b) { return a == b; }

bool is_full_complex_lattice(const ZLattice& l) {
  const std::size_t n = l.ambient_dim();
  if (l.rank() != 2 * n) return false;
  const auto b = l.basis();
  Matrix m(2 * n, 2 * n, l.field());
  for (std::size_t k = 0; k < 2 * n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      m(i, k) = b[k][i];
      m(n + i, k) = b[k][i].conj();
    }
  return !m.det().is_zero();
}

}  // namespace p8

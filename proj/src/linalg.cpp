#include "p8cryst/linalg.hpp"

#include <sstream>

namespace p8 {

namespace {

const CyclotomicField& default_field() { return CyclotomicField::get(kDefaultConductor); }

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const CycloNum inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const CycloNum f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw LinalgError(what);
}

}  // namespace

Vector zero_vector(std::size_t n, const CyclotomicField& field) { return Vector(n, CycloNum(field)); }

Vector unit_vector(std::size_t n, std::size_t k, const CyclotomicField& field) {
  Vector v = zero_vector(n, field);
  v.at(k) = CycloNum(mpq_class(1), field);
  return v;
}

Vector conj(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

Vector scale(const CycloNum& c, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector dimension mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector dimension mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, const CyclotomicField& field)
    : rows_(rows), cols_(cols), data_(rows * cols, CycloNum(field)) {}

Matrix Matrix::identity(std::size_t n, const CyclotomicField& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(mpq_class(1), field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  const auto& field = rows[0].empty() ? default_field() : rows[0][0].field();
  Matrix m(rows.size(), rows[0].size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = x.conj();
  return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Matrix out(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix dimension mismatch in product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycloNum& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix dimension mismatch in sum");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix dimension mismatch in difference");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const CycloNum& c, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x = c * x;
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols_ == v.size(), "matrix-vector dimension mismatch");
  Vector out = zero_vector(a.rows_, v.empty() ? default_field() : v[0].field());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(long k) const {
  require(square(), "power of a non-square matrix");
  Matrix base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Matrix result = identity(rows_);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::inverse() const {
  require(square(), "inverse of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<Vector> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = row(i);
    Vector e = unit_vector(n, i);
    a[i].insert(a[i].end(), e.begin(), e.end());
  }
  const auto pivots = rref(a, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw LinalgError("singular matrix");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  return out;
}

CycloNum Matrix::det() const {
  require(square(), "determinant of a non-square matrix");
  std::vector<Vector> a = rows_of(*this);
  const std::size_t n = rows_;
  CycloNum d(mpq_class(1), data_.empty() ? default_field() : data_[0].field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return CycloNum(d.field());
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    const CycloNum inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const CycloNum f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

std::size_t Matrix::rank() const {
  std::vector<Vector> a = rows_of(*this);
  return rref(a, cols_).size();
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycloNum& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

std::vector<Vector> Matrix::nullspace() const {
  std::vector<Vector> a = rows_of(*this);
  const auto pivots = rref(a, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(cols_, free);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t Matrix::hash() const noexcept {
  std::size_t h = rows_ * 1315423911u + cols_;
  for (const auto& x : data_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

HermitianGram::HermitianGram(Matrix m) : m_(std::move(m)) {
  require(m_.square(), "Gram matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (m_(j, i) != m_(i, j).conj())
        throw LinalgError("Gram matrix is not hermitian at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
}

HermitianGram HermitianGram::restrict_to(const std::vector<Vector>& basis) const {
  Matrix r(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) r(i, j) = herm_eval(*this, basis[i], basis[j]);
  return HermitianGram(std::move(r));
}

CycloNum herm_eval(const HermitianGram& g, const Vector& u, const Vector& v) {
  require(u.size() == g.dim() && v.size() == g.dim(), "herm_eval dimension mismatch");
  CycloNum acc(g.dim() ? g(0, 0).field() : default_field());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero() || g(i, j).is_zero()) continue;
      acc += u[i] * g(i, j) * v[j].conj();
    }
  }
  return acc;
}

std::vector<Vector> kernel(const HermitianGram& g) {
  std::vector<Vector> out;
  for (auto& v : g.matrix().nullspace()) out.push_back(conj(v));
  return out;
}

std::size_t rank(const HermitianGram& g) { return g.matrix().rank(); }

bool is_negative_semidefinite(const HermitianGram& g) {
  const std::size_t n = g.dim();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const CycloNum d = g.matrix().submatrix(idx, idx).det();
    if (!d.is_rational()) throw LinalgError("principal minor of a hermitian matrix is not rational");
    const mpq_class q = d.to_rational();
    // sign of det(-G_S) = (-1)^{|S|} det(G_S)
    if ((idx.size() % 2 == 0 ? q : -q) < 0) return false;
  }
  return true;
}

bool preserves_form(const Matrix& m, const HermitianGram& g) {
  return m.transpose() * g.matrix() * m.conj() == g.matrix();
}

}  // namespace p8

#include "p8cryst/cyclo.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace p8 {

namespace {

std::vector<std::pair<int, int>> prime_power_factors(int n) {
  std::vector<std::pair<int, int>> out;  // (prime, prime power)
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

// Exact Gauss-Jordan inverse of a square integer matrix over Q.
std::vector<std::vector<mpq_class>> rational_inverse(
    const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw CycloError("singular basis change matrix");
    std::swap(a[piv], a[col]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::string tensor_factor_name(int q, int b) {
  if (b == 0) return "1";
  switch (q) {
    case 4:
      return "i";
    case 8: {
      static const char* names[] = {"1", "e8", "i", "i*e8"};
      return names[b];
    }
    case 3:
      return "w";
    case 9: {
      static const char* names[] = {"1", "e9", "e9^2", "w", "w*e9", "w*e9^2"};
      return names[b];
    }
    default:
      return {};
  }
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (const auto& [p, q] : prime_power_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n <= 0) throw CycloError("conductor must be positive");
  std::vector<mpz_class> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto divisor = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int dp = static_cast<int>(poly.size()) - 1;
    std::vector<mpz_class> quotient(dp - dd + 1, 0);
    for (int k = dp; k >= dd; --k) {
      const mpz_class c = poly[k];  // divisor is monic
      quotient[k - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) poly[k - dd + j] -= c * divisor[j];
    }
    for (int k = 0; k < dd; ++k)
      if (poly[k] != 0) throw CycloError("inexact cyclotomic division");
    poly = std::move(quotient);
  }
  return poly;
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(conductor);
  if (it == registry.end()) {
    it = registry.emplace(conductor, std::unique_ptr<CyclotomicField>(new CyclotomicField(conductor)))
             .first;
  }
  return *it->second;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  degree_ = static_cast<int>(modulus_.size()) - 1;
  for (int j = 0; j < degree_; ++j)
    if (modulus_[j] != 0) modulus_terms_.emplace_back(j, modulus_[j]);

  powers_.reserve(conductor_);
  std::vector<mpz_class> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < conductor_; ++k) {
    powers_.push_back(cur);
    std::vector<mpz_class> next(degree_ + 1, 0);
    for (int j = 0; j < degree_; ++j) next[j + 1] = cur[j];
    reduce(next);
    cur = std::move(next);
  }

  const auto factors = prime_power_factors(conductor_);
  symbolic_ = true;
  for (const auto& [p, q] : factors)
    if (q != 2 && q != 4 && q != 8 && q != 3 && q != 9) symbolic_ = false;

  tensor_to_power_.assign(degree_, std::vector<mpz_class>(degree_, 0));
  tensor_names_.assign(degree_, {});
  for (int j = 0; j < degree_; ++j) {
    int rest = j;
    long exponent = 0;
    std::string name;
    for (const auto& [p, q] : factors) {
      const int phi = euler_phi(q);
      const int b = rest % phi;
      rest /= phi;
      exponent += static_cast<long>(conductor_ / q) * b;
      const std::string part = tensor_factor_name(q, b);
      if (!part.empty() && part != "1") name += (name.empty() ? "" : "*") + part;
    }
    tensor_names_[j] = name.empty() ? "1" : name;
    const auto& col = powers_[exponent % conductor_];
    for (int r = 0; r < degree_; ++r) tensor_to_power_[r][j] = col[r];
  }
  const auto inv = rational_inverse(tensor_to_power_);
  power_to_tensor_.assign(degree_, std::vector<mpz_class>(degree_, 0));
  for (int r = 0; r < degree_; ++r) {
    for (int c = 0; c < degree_; ++c) {
      if (inv[r][c].get_den() != 1) throw CycloError("tensor basis is not a Z-basis");
      power_to_tensor_[r][c] = inv[r][c].get_num();
    }
  }
}

const std::vector<mpz_class>& CyclotomicField::power(int k) const {
  k %= conductor_;
  if (k < 0) k += conductor_;
  return powers_[k];
}

void CyclotomicField::reduce(std::vector<mpz_class>& poly) const {
  for (int k = static_cast<int>(poly.size()) - 1; k >= degree_; --k) {
    if (poly[k] == 0) continue;
    const mpz_class c = poly[k];
    for (const auto& [j, m] : modulus_terms_)
      mpz_submul(poly[k - degree_ + j].get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    poly[k] = 0;
  }
  poly.resize(degree_, 0);
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum() : CycloNum(CyclotomicField::get(kDefaultConductor)) {}

CycloNum::CycloNum(const CyclotomicField& field)
    : field_(&field), num_(field.degree(), 0), den_(1) {}

CycloNum::CycloNum(long value) : CycloNum(mpq_class(value)) {}

CycloNum::CycloNum(const mpq_class& value, const CyclotomicField& field) : CycloNum(field) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycloNum::CycloNum(const mpq_class& value)
    : CycloNum(value, CyclotomicField::get(kDefaultConductor)) {}

CycloNum::CycloNum(const CyclotomicField* field, std::vector<mpz_class> num, mpz_class den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycloNum CycloNum::zeta_power(const CyclotomicField& field, long k) {
  const long n = field.conductor();
  long e = k % n;
  if (e < 0) e += n;
  return CycloNum(&field, field.power(static_cast<int>(e)), 1);
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  mpz_class g = den_;
  bool all_zero = true;
  for (const auto& x : num_) {
    if (x == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& x : num_)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycloNum::require_same_field(const CycloNum& other) const {
  if (field_ != other.field_) {
    throw CycloError("conductor mismatch: " + std::to_string(conductor()) + " vs " +
                     std::to_string(other.conductor()));
  }
}

mpq_class CycloNum::coeff(int k) const {
  mpq_class q(num_.at(k), den_);
  q.canonicalize();
  return q;
}

bool CycloNum::is_zero() const noexcept {
  for (const auto& x : num_)
    if (x != 0) return false;
  return true;
}

bool CycloNum::is_rational() const noexcept {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return false;
  return true;
}

bool CycloNum::is_one() const noexcept { return is_rational() && den_ == 1 && num_[0] == 1; }

mpq_class CycloNum::to_rational() const {
  if (!is_rational()) throw CycloError("value is not rational");
  return coeff(0);
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= rhs.den_;
      mpz_addmul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& x : out.num_) x = -x;
  return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.require_same_field(b);
  const int d = a.field_->degree();
  if (b.is_rational() || a.is_rational()) {
    const CycloNum& scalar = b.is_rational() ? b : a;
    const CycloNum& other = b.is_rational() ? a : b;
    std::vector<mpz_class> num(d);
    for (int k = 0; k < d; ++k) num[k] = other.num_[k] * scalar.num_[0];
    return CycloNum(a.field_, std::move(num), other.den_ * scalar.den_);
  }
  std::vector<int> nz_a, nz_b;
  for (int k = 0; k < d; ++k) {
    if (a.num_[k] != 0) nz_a.push_back(k);
    if (b.num_[k] != 0) nz_b.push_back(k);
  }
  std::vector<mpz_class> prod(2 * d - 1, 0);
  for (int i : nz_a)
    for (int j : nz_b)
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  a.field_->reduce(prod);
  return CycloNum(a.field_, std::move(prod), a.den_ * b.den_);
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) { return *this = *this * rhs; }

CycloNum& CycloNum::operator/=(const CycloNum& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  a.require_same_field(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw CycloError("division by zero");
  const int d = field_->degree();
  if (is_rational()) {
    std::vector<mpz_class> num(d, 0);
    num[0] = den_;
    return CycloNum(field_, std::move(num), num_[0]);
  }
  // Solve (a * y) = 1 through the multiplication matrix of a.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  std::vector<mpz_class> col = num_;
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d; ++r) m[r][j] = mpq_class(col[r], den_);
    std::vector<mpz_class> shifted(d + 1, 0);
    for (int r = 0; r < d; ++r) shifted[r + 1] = col[r];
    field_->reduce(shifted);
    col = std::move(shifted);
  }
  for (int r = 0; r < d; ++r) {
    for (int j = 0; j < d; ++j) m[r][j].canonicalize();
    m[r][d] = (r == 0) ? 1 : 0;
  }
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw CycloError("singular multiplication matrix");
    std::swap(m[piv], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (int j = c; j <= d; ++j) m[c][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (int j = c; j <= d; ++j) m[r][j] -= f * m[c][j];
    }
  }
  mpz_class common = 1;
  for (int r = 0; r < d; ++r) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), m[r][d].get_den_mpz_t());
  std::vector<mpz_class> num(d);
  for (int r = 0; r < d; ++r) num[r] = m[r][d].get_num() * (common / m[r][d].get_den());
  return CycloNum(field_, std::move(num), common);
}

CycloNum CycloNum::pow(long exponent) const {
  CycloNum base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  CycloNum result(mpq_class(1), *field_);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CycloNum CycloNum::galois(int k) const {
  if (std::gcd(k, conductor()) != 1) throw CycloError("galois exponent not coprime to conductor");
  const int d = field_->degree();
  std::vector<mpz_class> out(d, 0);
  for (int j = 0; j < d; ++j) {
    if (num_[j] == 0) continue;
    const auto& p = field_->power(static_cast<int>((static_cast<long>(j) * k) % conductor()));
    for (int r = 0; r < d; ++r)
      if (p[r] != 0) mpz_addmul(out[r].get_mpz_t(), num_[j].get_mpz_t(), p[r].get_mpz_t());
  }
  return CycloNum(field_, std::move(out), den_);
}

CycloNum CycloNum::conj() const { return galois(conductor() - 1 == 0 ? 1 : conductor() - 1); }

std::complex<double> CycloNum::to_complex(int primitive_power) const {
  std::complex<double> acc = 0;
  const double base = 2.0 * std::numbers::pi * primitive_power / conductor();
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    acc += num_[k].get_d() * std::polar(1.0, base * static_cast<double>(k));
  }
  return acc / den_.get_d();
}

std::size_t CycloNum::hash() const noexcept {
  auto mix = [](std::size_t h, const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t v = mpz_size(p) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(p, 0));
    v ^= static_cast<std::size_t>(mpz_sgn(p) + 1) << 1;
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = mix(static_cast<std::size_t>(conductor()), den_);
  for (const auto& x : num_) h = mix(h, x);
  return h;
}

std::vector<mpq_class> CycloNum::tensor_coordinates() const {
  const int d = field_->degree();
  const auto& m = field_->power_to_tensor();
  std::vector<mpq_class> out(d);
  for (int r = 0; r < d; ++r) {
    mpz_class acc = 0;
    for (int c = 0; c < d; ++c)
      if (num_[c] != 0 && m[r][c] != 0) mpz_addmul(acc.get_mpz_t(), m[r][c].get_mpz_t(), num_[c].get_mpz_t());
    out[r] = mpq_class(acc, den_);
    out[r].canonicalize();
  }
  return out;
}

CycloNum CycloNum::from_tensor_coordinates(const CyclotomicField& field,
                                           const std::vector<mpq_class>& coords) {
  const int d = field.degree();
  if (static_cast<int>(coords.size()) != d) throw CycloError("coordinate vector has wrong length");
  mpz_class common = 1;
  for (const auto& q : coords) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> scaled(d);
  for (int j = 0; j < d; ++j) scaled[j] = coords[j].get_num() * (common / coords[j].get_den());
  const auto& m = field.tensor_to_power();
  std::vector<mpz_class> num(d, 0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (scaled[c] != 0 && m[r][c] != 0) mpz_addmul(num[r].get_mpz_t(), m[r][c].get_mpz_t(), scaled[c].get_mpz_t());
  return CycloNum(&field, std::move(num), common);
}

// ---------------------------------------------------------------------------

CycloNum root_of_unity(int k, long power, const CyclotomicField& field) {
  if (k <= 0 || field.conductor() % k != 0) {
    throw CycloError("root_of_unity: " + std::to_string(k) + " does not divide conductor " +
                     std::to_string(field.conductor()));
  }
  return CycloNum::zeta_power(field, (field.conductor() / k) * power);
}

int root_of_unity_order(const CycloNum& x) {
  if (x.is_zero()) return 0;
  const int n = x.conductor();
  // Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
  const int bound = (n % 2 == 0) ? n : 2 * n;
  for (int d = 1; d <= bound; ++d) {
    if (bound % d != 0) continue;
    if (x.pow(d).is_one()) return d;
  }
  return 0;
}

bool subring_member(const CycloNum& a, Subring ring) {
  if (ring == Subring::Z) return a.is_rational() && a.denominator() == 1;
  const int m = ring == Subring::Z_i ? 4 : 3;
  if (a.conductor() % m != 0) return subring_member(a, Subring::Z);
  // Z[zeta_m] = Q(zeta_m) cap Z[zeta_N] with Z-basis {1, zeta_m}; solve for
  // the two coordinates and test integrality.
  const auto& field = a.field();
  const auto target = a.tensor_coordinates();
  const auto one = CycloNum(mpq_class(1), field).tensor_coordinates();
  const auto gen = root_of_unity(m, 1, field).tensor_coordinates();
  const std::size_t d = target.size();
  // Both basis vectors are distinct tensor basis elements or small
  // combinations; eliminate generically.
  std::size_t p1 = d, p2 = d;
  for (std::size_t r = 0; r < d && p1 == d; ++r)
    if (one[r] != 0) p1 = r;
  std::vector<mpq_class> gen_reduced = gen;
  const mpq_class f = gen[p1] / one[p1];
  for (std::size_t r = 0; r < d; ++r) gen_reduced[r] -= f * one[r];
  for (std::size_t r = 0; r < d && p2 == d; ++r)
    if (gen_reduced[r] != 0) p2 = r;
  if (p1 == d || p2 == d) throw CycloError("degenerate subring basis");
  // a = x*1 + y*gen = (x + y f)*one + y*gen_reduced
  const mpq_class y = target[p2] / gen_reduced[p2];
  std::vector<mpq_class> rest = target;
  for (std::size_t r = 0; r < d; ++r) rest[r] -= y * gen_reduced[r];
  const mpq_class xf = rest[p1] / one[p1];
  for (std::size_t r = 0; r < d; ++r) {
    if (rest[r] - xf * one[r] != 0) return false;
  }
  const mpq_class x = xf - y * f;
  return x.get_den() == 1 && y.get_den() == 1;
}

}  // namespace p8

#include "equidouble/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "equidouble/errors.hpp"

namespace equidouble {

std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ConstructionError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw ConstructionError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw ConstructionError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

int totient(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

struct ReductionTable {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;
  // powers[e] = x^e mod Phi_n as phi integer coefficients, e in [0, n).
  std::vector<std::vector<long>> powers;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    long c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

std::vector<long> compute_cyclotomic_polynomial(int n);

const ReductionTable& reduction_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ReductionTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto table = std::make_unique<ReductionTable>();
  table->n = n;
  table->phi = totient(n);
  table->poly = compute_cyclotomic_polynomial(n);
  const int phi = table->phi;
  table->powers.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    table->powers[e] = cur;
    // multiply by x and reduce
    long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * table->poly[i];
    }
  }
  auto& ref = *table;
  cache.emplace(n, std::move(table));
  return ref;
}

std::vector<long> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide_exact(num, compute_cyclotomic_polynomial(d));
  }
  return num;
}

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ArithmeticError("singular rational system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ConstructionError("cyclotomic polynomial needs n >= 1");
  return reduction_table(n).poly;
}

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) coeffs_.push_back(value);
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw ConstructionError("conductor must be positive");
  const auto& t = reduction_table(conductor);
  std::vector<Rational> reduced(t.phi);
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    const auto& row = t.powers[e % conductor];
    for (int i = 0; i < t.phi; ++i) {
      if (row[i] != 0) reduced[i] += coeffs[e] * row[i];
    }
  }
  conductor_ = conductor;
  coeffs_ = std::move(reduced);
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw ConstructionError("root of unity needs n >= 1");
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(e + 1);
  c[e] = 1;
  return Cyclotomic(n, std::move(c));
}

void Cyclotomic::normalize() {
  bool any_higher = false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      any_higher = true;
      break;
    }
  }
  if (any_higher) return;
  if (coeffs_.empty() || coeffs_[0] == 0) {
    coeffs_.clear();
  } else {
    coeffs_.resize(1);
  }
  conductor_ = 1;
}

bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw ArithmeticError("cyclotomic value " + to_string() + " is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int m) const {
  if (m % conductor_ != 0) throw ArithmeticError("cannot promote conductor " + std::to_string(conductor_) +
                                                 " to " + std::to_string(m));
  if (m == conductor_ || is_zero()) {
    Cyclotomic r = *this;
    if (!is_zero() && m != conductor_) r.conductor_ = m;
    return r;
  }
  const auto& t = reduction_table(m);
  const int step = m / conductor_;
  Cyclotomic r;
  r.conductor_ = m;
  r.coeffs_.assign(t.phi, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = t.powers[(i * step) % m];
    for (int k = 0; k < t.phi; ++k) {
      if (row[k] != 0) r.coeffs_[k] += coeffs_[i] * row[k];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (is_rational()) return *this;
  const int n = conductor_;
  if (std::gcd(((k % n) + n) % n, static_cast<long>(n)) != 1) {
    throw ArithmeticError("galois exponent not coprime to conductor");
  }
  const auto& t = reduction_table(n);
  long kk = ((k % n) + n) % n;
  Cyclotomic r;
  r.conductor_ = n;
  r.coeffs_.assign(t.phi, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = t.powers[(i * kk) % n];
    for (int j = 0; j < t.phi; ++j) {
      if (row[j] != 0) r.coeffs_[j] += coeffs_[i] * row[j];
    }
  }
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero cyclotomic");
  if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
  const auto& t = reduction_table(conductor_);
  const int phi = t.phi;
  // Column i of the multiplication matrix is x * z^i.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi));
  for (int i = 0; i < phi; ++i) {
    std::vector<Rational> basis(i + 1);
    basis[i] = 1;
    Cyclotomic zi(conductor_, std::move(basis));
    Cyclotomic col = (*this) * zi.promoted(conductor_);
    col = col.promoted(conductor_);
    for (int r = 0; r < phi; ++r) m[r][i] = col.coeffs_[r];
  }
  std::vector<Rational> rhs(phi);
  rhs[0] = 1;
  auto sol = solve_rational(std::move(m), std::move(rhs));
  return Cyclotomic(conductor_, std::move(sol));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (conductor_ == rhs.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }
  int m = std::lcm(conductor_, rhs.conductor_);
  Cyclotomic a = promoted(m);
  Cyclotomic b = rhs.promoted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.normalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational()) {
    Cyclotomic r = b;
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    return r;
  }
  if (b.is_rational()) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c *= b.coeffs_[0];
    return r;
  }
  const int m = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic xtmp;
  Cyclotomic ytmp;
  const Cyclotomic* xp = &a;
  const Cyclotomic* y = &b;
  if (a.conductor_ != m) {
    xtmp = a.promoted(m);
    xp = &xtmp;
  }
  if (b.conductor_ != m) {
    ytmp = b.promoted(m);
    y = &ytmp;
  }
  const auto& t = reduction_table(m);
  const int phi = t.phi;
  std::vector<Rational> conv(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (xp->coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (y->coeffs_[j] == 0) continue;
      conv[i + j] += xp->coeffs_[i] * y->coeffs_[j];
    }
  }
  Cyclotomic r;
  r.conductor_ = m;
  r.coeffs_.assign(phi, Rational(0));
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (conv[k] == 0) continue;
    if (k < phi) {
      r.coeffs_[k] += conv[k];
      continue;
    }
    const auto& row = t.powers[k % m];
    for (int i = 0; i < phi; ++i) {
      if (row[i] != 0) r.coeffs_[i] += conv[k] * row[i];
    }
  }
  r.normalize();
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = (*this) * rhs; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() || b.is_rational()) return false;  // normalized forms differ
  int m = std::lcm(a.conductor_, b.conductor_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << equidouble::to_string(coeffs_[i]);
    if (i > 0) out << "*z(" << conductor_ << ")^" << i;
  }
  return out.str();
}

}  // namespace equidouble

#include "gvz/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "gvz/errors.hpp"

namespace gvz {

int euler_phi(int n) {
  if (n < 1) throw InputError("euler_phi needs a positive argument");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<long long>;

// Exact division of a by a monic b; the remainder must vanish.
Poly divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  Poly quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long long c = rem[i];
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (long long r : rem) {
    if (r != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

struct FieldData {
  int conductor;
  int degree;
  Poly phi;
  // powers[k] = x^k reduced modulo phi, for 0 <= k < conductor.
  std::vector<Poly> powers;
};

std::shared_ptr<const FieldData> field_data(int e) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const FieldData>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(e); it != cache.end()) return it->second;

  auto data = std::make_shared<FieldData>();
  data->conductor = e;
  data->phi = cyclotomic_polynomial(e);
  data->degree = static_cast<int>(data->phi.size()) - 1;
  const int d = data->degree;
  Poly current(static_cast<std::size_t>(d), 0);
  current[0] = 1;
  for (int k = 0; k < e; ++k) {
    data->powers.push_back(current);
    // Multiply by x and reduce with the monic phi.
    Poly next(static_cast<std::size_t>(d), 0);
    const long long top = current[d - 1];
    for (int i = d - 1; i > 0; --i) next[i] = current[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] -= top * data->phi[i];
    current = std::move(next);
  }
  cache.emplace(e, data);
  return data;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic polynomial index must be positive");
  Poly result(static_cast<std::size_t>(n) + 1, 0);
  result[0] = -1;
  result[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) result = divide_exact(result, cyclotomic_polynomial(d));
  }
  return result;
}

Cyclotomic::Cyclotomic(int conductor) : conductor_(conductor) {
  if (conductor < 1) throw InputError("cyclotomic conductor must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rational(0));
}

Cyclotomic Cyclotomic::rational(const Rational& value, int conductor) {
  Cyclotomic z(conductor);
  z.coeffs_[0] = value;
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(long long k, int e) {
  if (e < 1) throw InputError("root of unity order must be positive");
  const auto data = field_data(e);
  long long r = k % e;
  if (r < 0) r += e;
  Cyclotomic z(e);
  const Poly& p = data->powers[static_cast<std::size_t>(r)];
  for (std::size_t i = 0; i < p.size(); ++i) z.coeffs_[i] = Rational(static_cast<long>(p[i]));
  return z;
}

Cyclotomic Cyclotomic::from_exponent_counts(const std::vector<long long>& counts, int e) {
  if (counts.size() != static_cast<std::size_t>(e)) {
    throw InputError("exponent count vector must have one entry per power of zeta");
  }
  const auto data = field_data(e);
  Cyclotomic z(e);
  std::vector<long long> acc(z.coeffs_.size(), 0);
  for (int k = 0; k < e; ++k) {
    if (counts[k] == 0) continue;
    const Poly& p = data->powers[k];
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += counts[k] * p[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i) z.coeffs_[i] = Rational(static_cast<long>(acc[i]));
  return z;
}

void Cyclotomic::require_same_field(const Cyclotomic& other) const {
  if (conductor_ != other.conductor_) {
    std::ostringstream msg;
    msg << "cyclotomic conductor mismatch: " << conductor_ << " vs " << other.conductor_;
    throw InputError(msg.str());
  }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  Cyclotomic out = *this;
  out += other;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
  require_same_field(other);
  Cyclotomic out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Rational& scalar) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  require_same_field(other);
  const auto data = field_data(conductor_);
  const std::size_t d = coeffs_.size();
  // Collect the raw product by exponent, then reduce each power once.
  std::vector<Rational> raw(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coeffs_[j] != 0) raw[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  Cyclotomic out(conductor_);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const Poly& p = data->powers[k % static_cast<std::size_t>(conductor_)];
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] != 0) out.coeffs_[i] += raw[k] * Rational(static_cast<long>(p[i]));
    }
  }
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  require_same_field(other);
  return coeffs_ == other.coeffs_;
}

Cyclotomic Cyclotomic::conj() const {
  const auto data = field_data(conductor_);
  Cyclotomic out(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const std::size_t k = (conductor_ - i % conductor_) % conductor_;
    const Poly& p = data->powers[k];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != 0) out.coeffs_[j] += coeffs_[i] * Rational(static_cast<long>(p[j]));
    }
  }
  return out;
}

Cyclotomic Cyclotomic::abs_squared() const { return *this * conj(); }

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::embed(int target) const {
  if (target < 1 || target % conductor_ != 0) {
    std::ostringstream msg;
    msg << "cannot embed Q(zeta_" << conductor_ << ") into Q(zeta_" << target << ")";
    throw InputError(msg.str());
  }
  if (target == conductor_) return *this;
  const auto data = field_data(target);
  const int step = target / conductor_;
  Cyclotomic out(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const Poly& p = data->powers[(i * static_cast<std::size_t>(step)) % target];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != 0) out.coeffs_[j] += coeffs_[i] * Rational(static_cast<long>(p[j]));
    }
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

std::complex<double> Cyclotomic::approximate() const {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

bool lexicographically_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace gvz

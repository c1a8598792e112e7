#include "mtakit/coefficient.hpp"

#include <sstream>
#include <stdexcept>

namespace mtakit {

Coefficient::Coefficient(int value) {
  if (value != 0) terms_[Monomial{}] = mpq_class(value);
}

Coefficient::Coefficient(long value) {
  if (value != 0) terms_[Monomial{}] = mpq_class(value);
}

Coefficient::Coefficient(const mpq_class& value) {
  if (value != 0) terms_[Monomial{}] = value;
}

Coefficient Coefficient::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Coefficient(q);
}

Coefficient Coefficient::x(std::uint32_t power) {
  return monomial(1, power, 0);
}

Coefficient Coefficient::c(std::uint32_t power) {
  return monomial(1, 0, power);
}

Coefficient Coefficient::monomial(const mpq_class& value, std::uint32_t x_power,
                                  std::uint32_t c_power) {
  Coefficient out;
  if (value != 0) out.terms_[Monomial{x_power, c_power}] = value;
  return out;
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
         terms_.begin()->second == 1;
}

bool Coefficient::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

mpq_class Coefficient::rational_value() const {
  if (terms_.empty()) return mpq_class(0);
  if (!is_rational())
    throw std::logic_error("rational_value: polynomial depends on x or c: " + str());
  return terms_.begin()->second;
}

std::uint32_t Coefficient::degree_x() const {
  std::uint32_t d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.x_exp);
  return d;
}

std::uint32_t Coefficient::degree_c() const {
  std::uint32_t d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.c_exp);
  return d;
}

void Coefficient::add_term(const Monomial& m, const mpq_class& value) {
  if (value == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, value);
  } else {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  for (const auto& [m, q] : rhs.terms_) add_term(m, q);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  for (const auto& [m, q] : rhs.terms_) add_term(m, mpq_class(-q));
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_)
      out.add_term(Monomial{ma.x_exp + mb.x_exp, ma.c_exp + mb.c_exp},
                   mpq_class(qa * qb));
  return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  *this = *this * rhs;
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [m, q] : terms_) out.terms_[m] = mpq_class(-q);
  return out;
}

Coefficient Coefficient::times_x(std::uint32_t power) const {
  if (power == 0) return *this;
  Coefficient out;
  for (const auto& [m, q] : terms_)
    out.terms_[Monomial{m.x_exp + power, m.c_exp}] = q;
  return out;
}

namespace {

mpq_class pow_q(const mpq_class& base, std::uint32_t e) {
  mpq_class out(1);
  for (std::uint32_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Coefficient Coefficient::substitute(const std::optional<mpq_class>& x_value,
                                    const std::optional<mpq_class>& c_value) const {
  Coefficient out;
  for (const auto& [m, q] : terms_) {
    mpq_class v = q;
    Monomial nm = m;
    if (x_value) {
      v *= pow_q(*x_value, m.x_exp);
      nm.x_exp = 0;
    }
    if (c_value) {
      v *= pow_q(*c_value, m.c_exp);
      nm.c_exp = 0;
    }
    out.add_term(nm, v);
  }
  return out;
}

bool Coefficient::try_divide(const Coefficient& num, const Coefficient& den,
                             Coefficient& quot) {
  if (den.is_zero()) return false;
  Coefficient q;
  Coefficient rem = num;
  const auto& [dm, dq] = *den.terms_.rbegin();  // leading term, lex order
  while (!rem.is_zero()) {
    const auto& [rm, rq] = *rem.terms_.rbegin();
    if (rm.x_exp < dm.x_exp || rm.c_exp < dm.c_exp) return false;
    Coefficient t = monomial(mpq_class(rq / dq), rm.x_exp - dm.x_exp,
                             rm.c_exp - dm.c_exp);
    q += t;
    rem -= t * den;
  }
  quot = q;
  return true;
}

std::string Coefficient::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomial first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, q] = *it;
    mpq_class a = q;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool has_vars = m.x_exp > 0 || m.c_exp > 0;
    if (!has_vars || a != 1) {
      os << a.get_str();
      if (has_vars) os << "*";
    }
    if (m.x_exp > 0) {
      os << "x";
      if (m.x_exp > 1) os << "^" << m.x_exp;
      if (m.c_exp > 0) os << "*";
    }
    if (m.c_exp > 0) {
      os << "c";
      if (m.c_exp > 1) os << "^" << m.c_exp;
    }
  }
  return os.str();
}

}  // namespace mtakit

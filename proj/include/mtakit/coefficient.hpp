#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace mtakit {

// Exponent pair of a monomial x^x_exp * c^c_exp.
struct Monomial {
  std::uint32_t x_exp = 0;
  std::uint32_t c_exp = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Exact sparse polynomial in Q[x, c]. x carries the Zhu-algebra generator,
// c the Virasoro central charge. Terms with zero coefficient are never
// stored, so equality of the term maps is exact equality of polynomials.
// Term order is lexicographic in (x exponent, c exponent).
class Coefficient {
public:
  Coefficient() = default;
  Coefficient(int value);  // NOLINT: implicit by design, enables literals
  Coefficient(long value);
  explicit Coefficient(const mpq_class& value);

  static Coefficient rational(long num, long den);
  static Coefficient x(std::uint32_t power = 1);
  static Coefficient c(std::uint32_t power = 1);
  static Coefficient monomial(const mpq_class& value, std::uint32_t x_power,
                              std::uint32_t c_power);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when the polynomial is a constant (possibly zero).
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

  std::uint32_t degree_x() const;
  std::uint32_t degree_c() const;

  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient operator-() const;
  bool operator==(const Coefficient&) const = default;

  // Multiply by x^power (exponent shift, no term merging needed).
  Coefficient times_x(std::uint32_t power) const;

  // Evaluate x and/or c at rational points; absent values stay formal.
  Coefficient substitute(const std::optional<mpq_class>& x_value,
                         const std::optional<mpq_class>& c_value) const;

  // Exact division: when den divides num in Q[x, c], stores the quotient and
  // returns true; otherwise returns false and leaves quot untouched.
  static bool try_divide(const Coefficient& num, const Coefficient& den,
                         Coefficient& quot);

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }

  // Canonical display form, highest monomial first, e.g. "2*x^2*c - 1/2".
  std::string str() const;

  void add_term(const Monomial& m, const mpq_class& value);

private:
  std::map<Monomial, mpq_class> terms_;
};

}  // namespace mtakit

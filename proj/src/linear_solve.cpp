#include "mtakit/linear_solve.hpp"

#include <stdexcept>
#include <utility>

namespace mtakit {

bool RationalFunction::is_polynomial() const {
  Coefficient q;
  return Coefficient::try_divide(num, den, q);
}

void RationalFunction::normalize() {
  if (num.is_zero()) {
    den = Coefficient(1);
    return;
  }
  Coefficient q;
  if (Coefficient::try_divide(num, den, q)) {
    num = std::move(q);
    den = Coefficient(1);
    return;
  }
  if (den.is_rational()) {
    // Fold a constant denominator into the numerator.
    mpq_class inv = 1 / den.rational_value();
    num *= Coefficient(inv);
    den = Coefficient(1);
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  num = num * rhs.den + rhs.num * den;
  den = den * rhs.den;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num *= rhs.num;
  den *= rhs.den;
  normalize();
  return *this;
}

namespace {

Coefficient exact_div(const Coefficient& num, const Coefficient& den) {
  Coefficient q;
  if (!Coefficient::try_divide(num, den, q))
    throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

struct Echelon {
  Matrix work;       // [a | appended rhs column], row-reduced
  Matrix transform;  // tracks row operations: work == transform * original
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, solution col)
};

// Fraction-free (Bareiss) forward elimination. Every intermediate entry is a
// minor of the original augmented matrix, so the divisions are exact and
// growth stays polynomial-sized.
Echelon eliminate(const Matrix& a, const std::vector<Coefficient>* rhs,
                  bool track_transform) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols)
      throw std::invalid_argument("solve_linear_system: ragged matrix");
  if (rhs && rhs->size() != rows)
    throw std::invalid_argument("solve_linear_system: rhs/matrix dimension mismatch");

  Echelon e;
  e.work = a;
  if (rhs)
    for (std::size_t i = 0; i < rows; ++i) e.work[i].push_back((*rhs)[i]);
  if (track_transform) {
    e.transform.assign(rows, std::vector<Coefficient>(rows, Coefficient(0)));
    for (std::size_t i = 0; i < rows; ++i) e.transform[i][i] = Coefficient(1);
  }

  Coefficient prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pr = r;
    while (pr < rows && e.work[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(e.work[r], e.work[pr]);
    if (track_transform) std::swap(e.transform[r], e.transform[pr]);

    const Coefficient pivot = e.work[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Coefficient factor = e.work[i][col];
      for (std::size_t j = 0; j < e.work[i].size(); ++j)
        e.work[i][j] = exact_div(pivot * e.work[i][j] - factor * e.work[r][j], prev);
      if (track_transform)
        for (std::size_t j = 0; j < rows; ++j)
          e.transform[i][j] =
              exact_div(pivot * e.transform[i][j] - factor * e.transform[r][j], prev);
    }
    prev = pivot;
    e.pivots.emplace_back(r, col);
    ++r;
  }
  return e;
}

// Back substitution over the fraction field; free variables already fixed.
void substitute_pivots(const Echelon& e, std::size_t n_cols,
                       std::vector<RationalFunction>& y,
                       bool rhs_column_present) {
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    const auto [r, pc] = *it;
    RationalFunction acc;
    if (rhs_column_present) acc.num = e.work[r][n_cols];
    for (std::size_t j = pc + 1; j < n_cols; ++j) {
      if (e.work[r][j].is_zero() || y[j].is_zero()) continue;
      RationalFunction t{-(e.work[r][j] * y[j].num), y[j].den};
      acc += t;
    }
    // acc now holds (rhs - sum) resp. (-sum) for the homogeneous case.
    y[pc] = RationalFunction{acc.num, acc.den * e.work[r][pc]};
    y[pc].normalize();
  }
}

}  // namespace

LinearSolution solve_linear_system(const Matrix& a,
                                   const std::vector<Coefficient>& rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Echelon e = eliminate(a, &rhs, /*track_transform=*/true);

  LinearSolution out;
  out.rank = e.pivots.size();

  for (std::size_t i = e.pivots.size(); i < rows; ++i) {
    if (!e.work[i][cols].is_zero()) {
      out.status = SolveStatus::Inconsistent;
      out.inconsistency_witness = e.transform[i];
      return out;
    }
  }

  out.status = SolveStatus::Solved;
  std::vector<RationalFunction> y(cols);
  substitute_pivots(e, cols, y, /*rhs_column_present=*/true);

  out.values = y;
  out.all_polynomial = true;
  out.polynomial_values.assign(cols, Coefficient(0));
  for (std::size_t j = 0; j < cols; ++j) {
    Coefficient q;
    if (Coefficient::try_divide(y[j].num, y[j].den, q)) {
      out.polynomial_values[j] = q;
    } else {
      out.all_polynomial = false;
      if (!out.offending_denominator) out.offending_denominator = y[j].den;
    }
  }
  if (!out.all_polynomial) out.polynomial_values.clear();
  return out;
}

namespace {

// Scale a fraction-field vector to polynomial entries and normalize the
// rational content so the output is deterministic.
std::vector<Coefficient> clear_denominators(const std::vector<RationalFunction>& y) {
  Coefficient scale(1);
  for (const auto& v : y)
    if (!v.is_zero() && !v.is_polynomial()) scale *= v.den;
  std::vector<Coefficient> out;
  out.reserve(y.size());
  for (const auto& v : y) {
    RationalFunction t{v.num * scale, v.den};
    t.normalize();
    Coefficient q;
    if (!Coefficient::try_divide(t.num, t.den, q))
      throw std::logic_error("kernel_basis: denominator clearing failed");
    out.push_back(q);
  }
  // Rational content: gcd of numerators over lcm of denominators.
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& p : out)
    for (const auto& [m, q] : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
  if (num_gcd != 0) {
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    Coefficient inv{mpq_class(1) / content};
    for (auto& p : out) p *= inv;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Coefficient>> kernel_basis(const Matrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Echelon e = eliminate(a, nullptr, /*track_transform=*/false);

  std::vector<bool> is_pivot(cols, false);
  for (const auto& [r, c] : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<Coefficient>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFunction> y(cols);
    y[f] = RationalFunction{Coefficient(1), Coefficient(1)};
    substitute_pivots(e, cols, y, /*rhs_column_present=*/false);
    basis.push_back(clear_denominators(y));
  }
  return basis;
}

std::size_t matrix_rank(const Matrix& a) {
  return eliminate(a, nullptr, /*track_transform=*/false).pivots.size();
}

}  // namespace mtakit

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mtakit/coefficient.hpp"

namespace mtakit {

using Matrix = std::vector<std::vector<Coefficient>>;

// Quotient of two polynomials in Q[x, c]. normalize() folds the denominator
// into the numerator whenever the division is exact.
struct RationalFunction {
  Coefficient num;
  Coefficient den = Coefficient(1);

  bool is_polynomial() const;
  void normalize();
  bool is_zero() const { return num.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
};

enum class SolveStatus { Solved, Inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::Solved;
  std::size_t rank = 0;

  // Populated when status == Solved; free variables are fixed to zero.
  std::vector<RationalFunction> values;
  bool all_polynomial = false;
  std::vector<Coefficient> polynomial_values;      // when all_polynomial
  std::optional<Coefficient> offending_denominator;  // first non-poly entry

  // Populated when status == Inconsistent: multipliers lambda with
  // lambda^T * A == 0 but lambda^T * rhs != 0.
  std::vector<Coefficient> inconsistency_witness;
};

// Solves A * y = rhs exactly over the fraction field of Q[x, c] using
// fraction-free (Bareiss) elimination. Throws std::invalid_argument on a
// shape mismatch between A and rhs.
LinearSolution solve_linear_system(const Matrix& a,
                                   const std::vector<Coefficient>& rhs);

// Basis of the nullspace of A over the fraction field, with denominators
// cleared so every basis vector has entries in Q[x, c].
std::vector<std::vector<Coefficient>> kernel_basis(const Matrix& a);

std::size_t matrix_rank(const Matrix& a);

}  // namespace mtakit

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mtakit/coefficient.hpp"

namespace mtakit {

// The two presented graded Lie algebras of modes. The bracket table is a
// closed enumeration; there is no user-supplied structure-constant loader.
enum class AlgebraKind { Heisenberg, Virasoro };

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::Heisenberg;

  // Degree window for Virasoro rewriting: a bracket-produced mode with
  // |index| beyond the window throws WindowExceeded. 0 means unbounded.
  int degree_window = 0;

  static AlgebraSpec heisenberg() { return {AlgebraKind::Heisenberg, 0}; }
  static AlgebraSpec virasoro(int window = 0) { return {AlgebraKind::Virasoro, window}; }

  // Identity of the algebra; the window is a computation bound, not identity.
  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.kind == b.kind;
  }
};

// A single generator mode H_n or L_n; deg(H_n) = deg(L_n) = -n.
struct Mode {
  int index = 0;
};

inline int mode_degree(Mode m) { return -m.index; }

// [a, b] as a formal sum of mode terms plus a central term. For Heisenberg
// the central element is fixed to 1 (level one), so the central contribution
// is a plain rational; for Virasoro it carries the formal variable c.
struct BracketResult {
  std::vector<std::pair<Coefficient, Mode>> modes;
  Coefficient central;

  bool is_zero() const { return modes.empty() && central.is_zero(); }
};

BracketResult bracket(const AlgebraSpec& alg, Mode a, Mode b);

// The mode-level anti-involution: H_n -> -H_{-n} and L_n -> L_{-n}.
struct SignedMode {
  int sign = 1;
  Mode mode;
};

SignedMode theta(const AlgebraSpec& alg, Mode a);

// Text form used by the CLI and JSON files: "H(-2)", "L(3)".
std::string mode_name(const AlgebraSpec& alg, int index);

// Parses "H(n)" / "L(n)"; throws std::invalid_argument on bad syntax or on a
// generator letter that does not belong to the algebra.
int parse_mode(const AlgebraSpec& alg, const std::string& text);

}  // namespace mtakit

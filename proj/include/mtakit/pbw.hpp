#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mtakit/algebra.hpp"
#include "mtakit/coefficient.hpp"

namespace mtakit {

// A product of modes, stored as the sequence of their indices. Canonical
// (PBW) form is weakly increasing: creation modes (negative indices) first,
// then zero modes, then annihilation modes (positive indices).
using ModeWord = std::vector<int>;

int word_degree(const ModeWord& w);              // -sum of indices
unsigned creation_weight(const ModeWord& w);     // sum of -i over i < 0
unsigned annihilation_weight(const ModeWord& w); // sum of  i over i > 0
unsigned zero_count(const ModeWord& w);
bool is_canonical(const ModeWord& w);

// A finite Q[x, c]-linear combination of canonical words: the computational
// form of an enveloping-algebra element. Values are immutable in spirit; all
// mutating operators return the object to support expression chaining only.
class EnvElement {
public:
  explicit EnvElement(AlgebraSpec alg) : alg_(alg) {}

  static EnvElement zero(AlgebraSpec alg) { return EnvElement(alg); }
  static EnvElement one(AlgebraSpec alg);
  static EnvElement mode(AlgebraSpec alg, int index);
  // Normal-orders an arbitrary word on construction.
  static EnvElement word(AlgebraSpec alg, const ModeWord& raw,
                         const Coefficient& coeff = Coefficient(1));

  const AlgebraSpec& algebra() const { return alg_; }
  const std::map<ModeWord, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const ModeWord& w) const;

  bool is_homogeneous() const;
  // Degree when homogeneous and nonzero; nullopt otherwise.
  std::optional<int> degree() const;

  EnvElement& operator+=(const EnvElement& rhs);
  EnvElement& operator-=(const EnvElement& rhs);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  EnvElement operator-() const;
  EnvElement scaled(const Coefficient& k) const;
  bool operator==(const EnvElement& rhs) const;

  // Merges a canonical term; drops it when the coefficient cancels to zero.
  void add_term(const ModeWord& canonical, const Coefficient& coeff);

private:
  AlgebraSpec alg_;
  std::map<ModeWord, Coefficient> terms_;
};

// Rewrites a raw word into canonical PBW form by bubbling out-of-order
// adjacent pairs through the bracket table.
EnvElement normal_order(const AlgebraSpec& alg, const ModeWord& raw,
                        const Coefficient& coeff = Coefficient(1));

// Concatenate-then-normal-order, extended bilinearly. Throws on an algebra
// kind mismatch.
EnvElement multiply(const EnvElement& a, const EnvElement& b);
inline EnvElement operator*(const EnvElement& a, const EnvElement& b) {
  return multiply(a, b);
}

EnvElement commutator(const EnvElement& a, const EnvElement& b);

// Canonical representative modulo the left ideal generated by elements of
// degree <= -n: drops words whose annihilation weight is >= n. Requires n > 0.
EnvElement truncate_left(const EnvElement& a, int n);
// Mirror image: drops words whose creation weight is >= n.
EnvElement truncate_right(const EnvElement& a, int n);

// Anti-involution transport: reverses each word and maps every mode through
// the mode-level theta.
EnvElement theta(const EnvElement& a);

// Process-wide term cap from MTAKIT_MAX_TERMS (out-of-memory guard).
std::size_t max_terms_cap();

}  // namespace mtakit

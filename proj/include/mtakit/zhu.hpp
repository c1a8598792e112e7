#pragma once

#include <string>
#include <vector>

#include "mtakit/partitions.hpp"
#include "mtakit/pbw.hpp"

namespace mtakit {

// Canonical representative of a class in the level-d Zhu algebra
// A_d = U_0 / N^{d+1} U_0. The representative is a degree-zero element
// already reduced by truncate_left(., d+1); for Heisenberg (and for any
// algebra at level zero) zero modes are folded into powers of x.
class ZhuElement {
public:
  ZhuElement(AlgebraSpec alg, unsigned level)
      : alg_(alg), level_(level), rep_(alg) {}
  static ZhuElement one(AlgebraSpec alg, unsigned level);

  const AlgebraSpec& algebra() const { return alg_; }
  unsigned level() const { return level_; }
  const EnvElement& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  ZhuElement& operator+=(const ZhuElement& rhs);
  ZhuElement& operator-=(const ZhuElement& rhs);
  friend ZhuElement operator+(ZhuElement a, const ZhuElement& b) { return a += b; }
  friend ZhuElement operator-(ZhuElement a, const ZhuElement& b) { return a -= b; }
  ZhuElement scaled(const Coefficient& k) const;
  bool operator==(const ZhuElement& rhs) const;

private:
  friend ZhuElement zhu_class(const EnvElement&, unsigned);
  AlgebraSpec alg_;
  unsigned level_;
  EnvElement rep_;
};

// Class of a degree-zero element in A_d. Throws std::invalid_argument when
// the input is not homogeneous of degree zero.
ZhuElement zhu_class(const EnvElement& a, unsigned level);

// Ring product: multiply representatives, reduce. Throws on level or algebra
// mismatch. Well-definedness is exercised by the test suite rather than
// assumed.
ZhuElement zhu_multiply(const ZhuElement& a, const ZhuElement& b);
inline ZhuElement operator*(const ZhuElement& a, const ZhuElement& b) {
  return zhu_multiply(a, b);
}

// The surjection A_d -> A_{d-1}. Throws at level zero.
ZhuElement pi_map(const ZhuElement& a);

// Heisenberg level-d basis over Q[x]: one word per pair of equal-size
// partitions (r, s) with |r| = |s| = j <= d, ordered by j, then r, then s in
// the partitions_of order.
ModeWord heisenberg_basis_word(const Partition& r, const Partition& s);
std::vector<ModeWord> heisenberg_zhu_basis(unsigned level);

// Machine verification of the level-one Virasoro picture inside a finite
// degree window: the quadratic lift of the kernel generator reduces into the
// second neighborhood ideal, the kernel is generated by the class of
// 2 L(-1)L(1), and kernel products follow f * g = 2 x f g on monomials.
struct VirasoroLevel1Report {
  int window = 0;
  unsigned product_degree_bound = 0;
  bool bracket_ok = false;             // [L(1), L(-1)] = 2 L(0)
  bool expansion_coefficient_ok = false;  // quadratic expansion picks up 2 L(-1)L(1)
  bool membership_ok = false;          // Ytilde - 2 L(-1)L(1) dies at level 1
  bool kernel_in_pi_kernel_ok = false;
  bool kernel_generated_ok = false;
  bool product_law_ok = false;
  bool ok = false;
  std::string failure;
};

VirasoroLevel1Report verify_virasoro_level1(int window,
                                            unsigned product_degree_bound = 6);

}  // namespace mtakit

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtakit/partitions.hpp"
#include "mtakit/pbw.hpp"
#include "mtakit/zhu.hpp"

namespace mtakit {

// Basis label of a mode transition algebra element: a pure-creation word
// (negative indices) and a pure-annihilation word (positive indices), both
// canonical. The middle A_0 factor lives in the Q[x, c] coefficient.
struct MtaKey {
  ModeWord creation;
  ModeWord annihilation;
  friend auto operator<=>(const MtaKey&, const MtaKey&) = default;
};

// Element of the direct sum of the bigraded pieces A_{d1,d2}: a Q[x, c]-linear
// combination of (creation word) x (A_0) x (annihilation word) tensors.
class MtaElement {
public:
  explicit MtaElement(AlgebraSpec alg) : alg_(alg) {}
  static MtaElement one(AlgebraSpec alg);
  static MtaElement basis_element(AlgebraSpec alg, const Partition& creation,
                                  const Partition& annihilation);

  const AlgebraSpec& algebra() const { return alg_; }
  const std::map<MtaKey, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const MtaKey& key) const;

  // (creation weight, annihilation weight) when all terms agree; nullopt
  // otherwise. The bidegree of A_{d1,d2} is (d1, -d2) with d2 = weight.
  std::optional<std::pair<unsigned, unsigned>> homogeneous_bidegree() const;

  MtaElement& operator+=(const MtaElement& rhs);
  MtaElement& operator-=(const MtaElement& rhs);
  friend MtaElement operator+(MtaElement a, const MtaElement& b) { return a += b; }
  friend MtaElement operator-(MtaElement a, const MtaElement& b) { return a -= b; }
  MtaElement scaled(const Coefficient& k) const;
  bool operator==(const MtaElement& rhs) const;

  // Throws std::invalid_argument unless the key is a canonical pure-creation /
  // pure-annihilation pair.
  void add_term(const MtaKey& key, const Coefficient& coeff);

private:
  AlgebraSpec alg_;
  std::map<MtaKey, Coefficient> terms_;
};

// The contraction pairing: annihilation-side alpha against creation-side
// beta, by homogeneous parts. Zero on a degree mismatch, and otherwise the
// level-zero class of the product.
ZhuElement ostar(const EnvElement& alpha, const EnvElement& beta);

// The algebra product: (u @ a @ u') * (v @ b @ v') = u @ a (u' <*> v) b @ v',
// extended bilinearly. Cross terms whose inner degrees do not cancel vanish.
MtaElement star(const MtaElement& a, const MtaElement& b);

// Free A_0-module basis of A_{d1,-d2}: one element per pair of partitions
// (r, s) with |r| = d1, |s| = d2, in partitions_of order, r outer. Generic
// enumeration is Heisenberg-only; throws for Virasoro.
std::vector<MtaElement> mta_basis(const AlgebraSpec& alg, unsigned d1, unsigned d2);

// Left and right actions of the enveloping algebra on the outer tensor
// factors. Words acquiring modes of the wrong sign on an outer factor drop
// out (they lie in the defining ideals); zero modes transport into the middle
// as powers of x.
MtaElement u_act_left(const EnvElement& u, const MtaElement& a);
MtaElement u_act_right(const MtaElement& a, const EnvElement& u);

// Identity search in A_d by exact linear solving over C(x), with the
// polynomiality certificate the ring structure over C[x] requires.
struct IdentitySearch {
  unsigned d = 0;
  bool exists = false;
  std::optional<MtaElement> identity;
  bool verified = false;  // substitution check e*b = b = b*e on the basis
  // When a fraction-field solution exists but is not polynomial.
  std::optional<Coefficient> offending_denominator;
  // When even the fraction field admits no solution.
  bool inconsistent = false;
  std::size_t basis_size = 0;
};

IdentitySearch find_identity(const AlgebraSpec& alg, unsigned d);

// mu_d: A_{d,-d} -> A_d, (u @ a @ v) -> [u a v]_d. Throws unless the element
// is homogeneous of bidegree (d, -d).
ZhuElement mu(const MtaElement& a, unsigned d);

struct StrongIdentityCheck {
  int n = 0;
  unsigned d = 0;
  bool ok = false;
};

struct StrongIdentityReport {
  unsigned d_max = 0;
  int n_window = 0;
  bool identities_found = false;
  std::optional<unsigned> missing_identity_level;
  // Transport equations J_n(gen) . I_d = I_{d-n} . J_n(gen).
  std::vector<StrongIdentityCheck> transport;
  bool transport_ok = false;
  // Two-sided unit condition I_n * a = a = a * I_m on the A_{n,-m} bases.
  bool unit_condition_ok = false;
  bool ok = false;
  std::string failure;
};

StrongIdentityReport verify_strong_identity(const AlgebraSpec& alg,
                                            unsigned d_max, int n_window);

// Level-d multiplication table against the closed norm form, plus the
// rescaled matrix-unit relations that identify A_d with Mat_{p(d)}(C[x]).
struct MtaStructureReport {
  unsigned d = 0;
  std::size_t basis_size = 0;
  std::size_t expected_basis_size = 0;
  bool table_matches_norm_form = false;
  bool matrix_units_ok = false;
  bool identity_matches_closed_form = false;
  bool ok = false;
  std::string failure;
};

MtaStructureReport verify_mta_structure(const AlgebraSpec& alg, unsigned d);

}  // namespace mtakit

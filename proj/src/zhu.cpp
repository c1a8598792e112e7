#include "mtakit/zhu.hpp"

#include <stdexcept>

namespace mtakit {

ZhuElement ZhuElement::one(AlgebraSpec alg, unsigned level) {
  return zhu_class(EnvElement::one(alg), level);
}

ZhuElement& ZhuElement::operator+=(const ZhuElement& rhs) {
  if (!(alg_ == rhs.alg_) || level_ != rhs.level_)
    throw std::invalid_argument("ZhuElement: level or algebra mismatch");
  rep_ += rhs.rep_;
  return *this;
}

ZhuElement& ZhuElement::operator-=(const ZhuElement& rhs) {
  if (!(alg_ == rhs.alg_) || level_ != rhs.level_)
    throw std::invalid_argument("ZhuElement: level or algebra mismatch");
  rep_ -= rhs.rep_;
  return *this;
}

ZhuElement ZhuElement::scaled(const Coefficient& k) const {
  ZhuElement out(alg_, level_);
  out.rep_ = rep_.scaled(k);
  return out;
}

bool ZhuElement::operator==(const ZhuElement& rhs) const {
  return alg_ == rhs.alg_ && level_ == rhs.level_ && rep_ == rhs.rep_;
}

namespace {

// Rewrite zero modes as powers of x. Valid for Heisenberg at every level
// (H_0 is central and maps to the Zhu generator) and for either algebra at
// level zero, where A_0 is the polynomial ring on the zero mode's class.
EnvElement fold_zero_modes(const EnvElement& e) {
  EnvElement out(e.algebra());
  for (const auto& [w, c] : e.terms()) {
    ModeWord stripped;
    stripped.reserve(w.size());
    unsigned zeros = 0;
    for (int i : w) {
      if (i == 0)
        ++zeros;
      else
        stripped.push_back(i);
    }
    out.add_term(stripped, zeros == 0 ? c : c.times_x(zeros));
  }
  return out;
}

}  // namespace

ZhuElement zhu_class(const EnvElement& a, unsigned level) {
  if (!a.is_zero()) {
    const auto d = a.degree();
    if (!d || *d != 0)
      throw std::invalid_argument("zhu_class: input must be homogeneous of degree 0");
  }
  ZhuElement out(a.algebra(), level);
  out.rep_ = truncate_left(a, static_cast<int>(level) + 1);
  if (a.algebra().kind == AlgebraKind::Heisenberg || level == 0)
    out.rep_ = fold_zero_modes(out.rep_);
  return out;
}

ZhuElement zhu_multiply(const ZhuElement& a, const ZhuElement& b) {
  if (!(a.algebra() == b.algebra()) || a.level() != b.level())
    throw std::invalid_argument("zhu_multiply: level or algebra mismatch");
  return zhu_class(multiply(a.rep(), b.rep()), a.level());
}

ZhuElement pi_map(const ZhuElement& a) {
  if (a.level() == 0) throw std::invalid_argument("pi_map: undefined at level 0");
  return zhu_class(a.rep(), a.level() - 1);
}

ModeWord heisenberg_basis_word(const Partition& r, const Partition& s) {
  ModeWord w;
  w.reserve(r.size() + s.size());
  for (unsigned part : r) w.push_back(-static_cast<int>(part));
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    w.push_back(static_cast<int>(*it));
  return w;
}

std::vector<ModeWord> heisenberg_zhu_basis(unsigned level) {
  std::vector<ModeWord> basis;
  for (unsigned j = 0; j <= level; ++j) {
    const auto parts = partitions_of(j);
    for (const auto& r : parts)
      for (const auto& s : parts) basis.push_back(heisenberg_basis_word(r, s));
  }
  return basis;
}

VirasoroLevel1Report verify_virasoro_level1(int window,
                                            unsigned product_degree_bound) {
  if (window < 4)
    throw std::invalid_argument("verify_virasoro_level1: window must be >= 4");
  const AlgebraSpec alg = AlgebraSpec::virasoro(window);
  VirasoroLevel1Report rep;
  rep.window = window;
  rep.product_degree_bound = product_degree_bound;

  auto fail = [&rep](const std::string& what) {
    if (rep.failure.empty()) rep.failure = what;
  };

  // Bracket engine reproduces [L(1), L(-1)] = 2 L(0).
  const EnvElement l1 = EnvElement::mode(alg, 1);
  const EnvElement lm1 = EnvElement::mode(alg, -1);
  EnvElement two_l0 = EnvElement::mode(alg, 0).scaled(Coefficient(2));
  rep.bracket_ok = commutator(l1, lm1) == two_l0;
  if (!rep.bracket_ok) fail("[L(1), L(-1)] != 2 L(0)");

  // Quadratic expansion of the squared conformal mode at depth 3, truncated
  // to the window: sum_{n>=2} 2 L(-n)L(n) + L(-1)L(1) + L(1)L(-1) + L(0)L(0).
  EnvElement expansion(alg);
  for (int n = 2; n <= window; ++n)
    expansion += EnvElement::word(alg, {-n, n}, Coefficient(2));
  expansion += EnvElement::word(alg, {-1, 1});
  expansion += EnvElement::word(alg, {1, -1});
  expansion += EnvElement::word(alg, {0, 0});

  rep.expansion_coefficient_ok =
      expansion.coefficient({-1, 1}) == Coefficient(2);
  if (!rep.expansion_coefficient_ok)
    fail("expansion lacks the 2 L(-1)L(1) term");

  EnvElement ytilde = expansion - EnvElement::word(alg, {0, 0}) -
                      EnvElement::mode(alg, 0).scaled(Coefficient(2));
  EnvElement residue = ytilde - EnvElement::word(alg, {-1, 1}, Coefficient(2));
  rep.membership_ok = truncate_left(residue, 2).is_zero();
  if (!rep.membership_ok)
    fail("Ytilde - 2 L(-1)L(1) does not lie in the second neighborhood ideal");

  // Kernel monomials K_m = [L(-1) L(0)^m L(1)] at level 1.
  const unsigned top = 2 * product_degree_bound + 2;
  std::vector<ZhuElement> kernel;
  for (unsigned m = 0; m <= top; ++m) {
    ModeWord w{-1};
    w.insert(w.end(), m, 0);
    w.push_back(1);
    kernel.push_back(zhu_class(EnvElement::word(alg, w), 1));
  }

  rep.kernel_in_pi_kernel_ok = true;
  for (unsigned m = 0; m <= top; ++m)
    if (!pi_map(kernel[m]).is_zero()) {
      rep.kernel_in_pi_kernel_ok = false;
      fail("pi_1 does not kill kernel monomial m=" + std::to_string(m));
      break;
    }

  // The class of Ytilde generates: [Ytilde] = 2 K_0, and multiplying by the
  // class of L(0) walks up the x-filtration: x K_{m-1} - K_{m-1} = K_m.
  rep.kernel_generated_ok = zhu_class(ytilde, 1) == kernel[0].scaled(Coefficient(2));
  const ZhuElement x_class = zhu_class(EnvElement::mode(alg, 0), 1);
  for (unsigned m = 1; m <= top && rep.kernel_generated_ok; ++m) {
    if (!(zhu_multiply(x_class, kernel[m - 1]) - kernel[m - 1] == kernel[m]))
      rep.kernel_generated_ok = false;
  }
  if (!rep.kernel_generated_ok) fail("kernel generation chain failed");

  // Product law on monomials: K_i K_j = 2 K_{i+j+1}.
  rep.product_law_ok = true;
  for (unsigned i = 0; i <= product_degree_bound && rep.product_law_ok; ++i)
    for (unsigned j = 0; i + j <= product_degree_bound; ++j)
      if (!(zhu_multiply(kernel[i], kernel[j]) ==
            kernel[i + j + 1].scaled(Coefficient(2)))) {
        rep.product_law_ok = false;
        fail("product law K_i K_j = 2 K_{i+j+1} failed at i=" +
             std::to_string(i) + " j=" + std::to_string(j));
        break;
      }

  rep.ok = rep.bracket_ok && rep.expansion_coefficient_ok && rep.membership_ok &&
           rep.kernel_in_pi_kernel_ok && rep.kernel_generated_ok &&
           rep.product_law_ok;
  return rep;
}

}  // namespace mtakit

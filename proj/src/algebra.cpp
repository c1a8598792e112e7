#include "mtakit/algebra.hpp"

#include <stdexcept>

namespace mtakit {

BracketResult bracket(const AlgebraSpec& alg, Mode a, Mode b) {
  BracketResult out;
  const long m = a.index;
  const long n = b.index;
  switch (alg.kind) {
    case AlgebraKind::Heisenberg:
      // [H_m, H_n] = m delta_{m+n,0} at level one.
      if (m + n == 0 && m != 0) out.central = Coefficient(m);
      break;
    case AlgebraKind::Virasoro:
      // [L_p, L_q] = (p - q) L_{p+q} + c/12 (p^3 - p) delta_{p+q,0}.
      if (m != n)
        out.modes.emplace_back(Coefficient(m - n), Mode{static_cast<int>(m + n)});
      if (m + n == 0 && m != 0) {
        mpq_class factor(m * m * m - m, 12);
        factor.canonicalize();
        out.central = Coefficient::monomial(factor, 0, 1);
      }
      break;
  }
  return out;
}

SignedMode theta(const AlgebraSpec& alg, Mode a) {
  // theta(J_n(gen)) = J_{-n}(gamma(gen)); gamma flips the sign of the
  // degree-one Heisenberg generator and fixes the degree-two Virasoro one.
  const int sign = alg.kind == AlgebraKind::Heisenberg ? -1 : 1;
  return SignedMode{sign, Mode{-a.index}};
}

std::string mode_name(const AlgebraSpec& alg, int index) {
  const char letter = alg.kind == AlgebraKind::Heisenberg ? 'H' : 'L';
  return std::string(1, letter) + "(" + std::to_string(index) + ")";
}

int parse_mode(const AlgebraSpec& alg, const std::string& text) {
  const char expected = alg.kind == AlgebraKind::Heisenberg ? 'H' : 'L';
  if (text.size() < 4 || text[0] != expected || text[1] != '(' || text.back() != ')')
    throw std::invalid_argument("bad mode literal: " + text);
  try {
    std::size_t used = 0;
    const int index = std::stoi(text.substr(2, text.size() - 3), &used);
    if (used != text.size() - 3) throw std::invalid_argument(text);
    return index;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad mode literal: " + text);
  }
}

}  // namespace mtakit

#include "mtakit/pbw.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "mtakit/errors.hpp"

namespace mtakit {

int word_degree(const ModeWord& w) {
  long s = 0;
  for (int i : w) s += i;
  return static_cast<int>(-s);
}

unsigned creation_weight(const ModeWord& w) {
  long s = 0;
  for (int i : w)
    if (i < 0) s -= i;
  return static_cast<unsigned>(s);
}

unsigned annihilation_weight(const ModeWord& w) {
  long s = 0;
  for (int i : w)
    if (i > 0) s += i;
  return static_cast<unsigned>(s);
}

unsigned zero_count(const ModeWord& w) {
  return static_cast<unsigned>(std::count(w.begin(), w.end(), 0));
}

bool is_canonical(const ModeWord& w) {
  return std::is_sorted(w.begin(), w.end());
}

std::size_t max_terms_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("MTAKIT_MAX_TERMS")) {
      const long v = std::atol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(4'000'000);
  }();
  return cap;
}

EnvElement EnvElement::one(AlgebraSpec alg) {
  EnvElement e(alg);
  e.add_term({}, Coefficient(1));
  return e;
}

EnvElement EnvElement::mode(AlgebraSpec alg, int index) {
  EnvElement e(alg);
  e.add_term({index}, Coefficient(1));
  return e;
}

EnvElement EnvElement::word(AlgebraSpec alg, const ModeWord& raw,
                            const Coefficient& coeff) {
  return normal_order(alg, raw, coeff);
}

Coefficient EnvElement::coefficient(const ModeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

bool EnvElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = word_degree(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != d) return false;
  return true;
}

std::optional<int> EnvElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return word_degree(terms_.begin()->first);
}

void EnvElement::add_term(const ModeWord& canonical, const Coefficient& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(canonical);
  if (it == terms_.end()) {
    if (terms_.size() >= max_terms_cap())
      throw TermLimitExceeded("element exceeds MTAKIT_MAX_TERMS");
    terms_.emplace(canonical, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EnvElement& EnvElement::operator+=(const EnvElement& rhs) {
  if (!(alg_ == rhs.alg_)) throw std::invalid_argument("algebra mismatch");
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& rhs) {
  if (!(alg_ == rhs.alg_)) throw std::invalid_argument("algebra mismatch");
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

EnvElement EnvElement::operator-() const {
  EnvElement out(alg_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

EnvElement EnvElement::scaled(const Coefficient& k) const {
  EnvElement out(alg_);
  if (k.is_zero()) return out;
  for (const auto& [w, c] : terms_) out.add_term(w, c * k);
  return out;
}

bool EnvElement::operator==(const EnvElement& rhs) const {
  return alg_ == rhs.alg_ && terms_ == rhs.terms_;
}

namespace {

void check_window(const AlgebraSpec& alg, int index) {
  if (alg.degree_window > 0 && std::abs(index) > alg.degree_window)
    throw WindowExceeded("mode index " + std::to_string(index) +
                         " escapes degree window " +
                         std::to_string(alg.degree_window));
}

}  // namespace

EnvElement normal_order(const AlgebraSpec& alg, const ModeWord& raw,
                        const Coefficient& coeff) {
  EnvElement out(alg);
  if (coeff.is_zero()) return out;

  std::vector<std::pair<ModeWord, Coefficient>> work;
  work.emplace_back(raw, coeff);
  while (!work.empty()) {
    auto [w, cf] = std::move(work.back());
    work.pop_back();

    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out.add_term(w, cf);
      continue;
    }

    // w[i] > w[i+1]: swap and append the bracket correction terms. Each
    // correction strictly shortens the word, so the rewriting terminates.
    const Mode a{w[i]}, b{w[i + 1]};
    ModeWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(std::move(swapped), cf);

    const BracketResult br = bracket(alg, a, b);
    for (const auto& [k, m] : br.modes) {
      check_window(alg, m.index);
      ModeWord shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.push_back(m.index);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      work.emplace_back(std::move(shorter), cf * k);
    }
    if (!br.central.is_zero()) {
      ModeWord shorter;
      shorter.reserve(w.size() - 2);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      work.emplace_back(std::move(shorter), cf * br.central);
    }
  }
  return out;
}

EnvElement multiply(const EnvElement& a, const EnvElement& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("multiply: algebra mismatch");
  AlgebraSpec alg = a.algebra();
  if (alg.degree_window == 0 ||
      (b.algebra().degree_window > 0 &&
       b.algebra().degree_window < alg.degree_window))
    alg.degree_window = b.algebra().degree_window;

  EnvElement out(alg);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      ModeWord raw = wa;
      raw.insert(raw.end(), wb.begin(), wb.end());
      out += normal_order(alg, raw, ca * cb);
    }
  }
  return out;
}

EnvElement commutator(const EnvElement& a, const EnvElement& b) {
  return multiply(a, b) - multiply(b, a);
}

EnvElement truncate_left(const EnvElement& a, int n) {
  if (n <= 0) throw std::invalid_argument("truncate_left: n must be positive");
  EnvElement out(a.algebra());
  for (const auto& [w, c] : a.terms())
    if (annihilation_weight(w) < static_cast<unsigned>(n)) out.add_term(w, c);
  return out;
}

EnvElement truncate_right(const EnvElement& a, int n) {
  if (n <= 0) throw std::invalid_argument("truncate_right: n must be positive");
  EnvElement out(a.algebra());
  for (const auto& [w, c] : a.terms())
    if (creation_weight(w) < static_cast<unsigned>(n)) out.add_term(w, c);
  return out;
}

EnvElement theta(const EnvElement& a) {
  EnvElement out(a.algebra());
  for (const auto& [w, c] : a.terms()) {
    ModeWord mapped;
    mapped.reserve(w.size());
    int sign = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const SignedMode sm = theta(a.algebra(), Mode{*it});
      sign *= sm.sign;
      mapped.push_back(sm.mode.index);
    }
    // The reversed image of a canonical word is canonical again; raw inputs
    // still pass through the rewriter.
    out += normal_order(a.algebra(), mapped, sign < 0 ? -c : c);
  }
  return out;
}

}  // namespace mtakit

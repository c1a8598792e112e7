#include "mtakit/mta.hpp"

#include <algorithm>
#include <stdexcept>

#include "mtakit/linear_solve.hpp"

namespace mtakit {

namespace {

bool valid_creation_word(const ModeWord& w) {
  return is_canonical(w) && std::all_of(w.begin(), w.end(), [](int i) { return i < 0; });
}

bool valid_annihilation_word(const ModeWord& w) {
  return is_canonical(w) && std::all_of(w.begin(), w.end(), [](int i) { return i > 0; });
}

ModeWord creation_word(const Partition& r) {
  ModeWord w;
  w.reserve(r.size());
  for (unsigned part : r) w.push_back(-static_cast<int>(part));
  return w;
}

ModeWord annihilation_word(const Partition& s) {
  ModeWord w;
  w.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    w.push_back(static_cast<int>(*it));
  return w;
}

}  // namespace

MtaElement MtaElement::one(AlgebraSpec alg) {
  MtaElement e(alg);
  e.add_term(MtaKey{}, Coefficient(1));
  return e;
}

MtaElement MtaElement::basis_element(AlgebraSpec alg, const Partition& creation,
                                     const Partition& annihilation) {
  MtaElement e(alg);
  e.add_term(MtaKey{creation_word(creation), annihilation_word(annihilation)},
             Coefficient(1));
  return e;
}

Coefficient MtaElement::coefficient(const MtaKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

std::optional<std::pair<unsigned, unsigned>> MtaElement::homogeneous_bidegree()
    const {
  if (terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  const std::pair<unsigned, unsigned> bd{creation_weight(first.creation),
                                         annihilation_weight(first.annihilation)};
  for (const auto& [key, c] : terms_) {
    if (creation_weight(key.creation) != bd.first ||
        annihilation_weight(key.annihilation) != bd.second)
      return std::nullopt;
  }
  return bd;
}

void MtaElement::add_term(const MtaKey& key, const Coefficient& coeff) {
  if (coeff.is_zero()) return;
  if (!valid_creation_word(key.creation) || !valid_annihilation_word(key.annihilation))
    throw std::invalid_argument("MtaElement: non-canonical tensor key");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MtaElement& MtaElement::operator+=(const MtaElement& rhs) {
  if (!(alg_ == rhs.alg_)) throw std::invalid_argument("MtaElement: algebra mismatch");
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

MtaElement& MtaElement::operator-=(const MtaElement& rhs) {
  if (!(alg_ == rhs.alg_)) throw std::invalid_argument("MtaElement: algebra mismatch");
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

MtaElement MtaElement::scaled(const Coefficient& k) const {
  MtaElement out(alg_);
  if (k.is_zero()) return out;
  for (const auto& [key, c] : terms_) out.add_term(key, c * k);
  return out;
}

bool MtaElement::operator==(const MtaElement& rhs) const {
  return alg_ == rhs.alg_ && terms_ == rhs.terms_;
}

ZhuElement ostar(const EnvElement& alpha, const EnvElement& beta) {
  if (!(alpha.algebra() == beta.algebra()))
    throw std::invalid_argument("ostar: algebra mismatch");
  ZhuElement out(alpha.algebra(), 0);
  for (const auto& [wa, ca] : alpha.terms())
    for (const auto& [wb, cb] : beta.terms()) {
      if (word_degree(wa) + word_degree(wb) != 0) continue;
      ModeWord raw = wa;
      raw.insert(raw.end(), wb.begin(), wb.end());
      out += zhu_class(normal_order(alpha.algebra(), raw, ca * cb), 0);
    }
  return out;
}

namespace {

// A level-zero class is a rational-function-free polynomial multiple of the
// empty word; extract that scalar.
Coefficient level0_scalar(const ZhuElement& z) {
  return z.rep().coefficient({});
}

}  // namespace

MtaElement star(const MtaElement& a, const MtaElement& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("star: algebra mismatch");
  const AlgebraSpec alg = a.algebra();
  MtaElement out(alg);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (annihilation_weight(ka.annihilation) != creation_weight(kb.creation))
        continue;
      const ZhuElement inner = ostar(EnvElement::word(alg, ka.annihilation),
                                     EnvElement::word(alg, kb.creation));
      const Coefficient scalar = level0_scalar(inner);
      if (scalar.is_zero()) continue;
      out.add_term(MtaKey{ka.creation, kb.annihilation}, ca * scalar * cb);
    }
  return out;
}

std::vector<MtaElement> mta_basis(const AlgebraSpec& alg, unsigned d1, unsigned d2) {
  if (alg.kind != AlgebraKind::Heisenberg)
    throw std::invalid_argument("mta_basis: generic enumeration is Heisenberg-only");
  std::vector<MtaElement> out;
  for (const auto& r : partitions_of(d1))
    for (const auto& s : partitions_of(d2))
      out.push_back(MtaElement::basis_element(alg, r, s));
  return out;
}

namespace {

// Splits a canonical word into its creation / zero / annihilation segments.
struct WordSplit {
  ModeWord creation;
  unsigned zeros = 0;
  ModeWord annihilation;
};

WordSplit split_word(const ModeWord& w) {
  WordSplit s;
  for (int i : w) {
    if (i < 0)
      s.creation.push_back(i);
    else if (i == 0)
      ++s.zeros;
    else
      s.annihilation.push_back(i);
  }
  return s;
}

}  // namespace

MtaElement u_act_left(const EnvElement& u, const MtaElement& a) {
  if (!(u.algebra() == a.algebra()))
    throw std::invalid_argument("u_act_left: algebra mismatch");
  MtaElement out(a.algebra());
  for (const auto& [key, f] : a.terms()) {
    const EnvElement moved = multiply(u, EnvElement::word(a.algebra(), key.creation));
    for (const auto& [w, cf] : moved.terms()) {
      const WordSplit s = split_word(w);
      if (!s.annihilation.empty()) continue;  // class zero in U / N^1 U
      out.add_term(MtaKey{s.creation, key.annihilation},
                   f * cf.times_x(s.zeros));
    }
  }
  return out;
}

MtaElement u_act_right(const MtaElement& a, const EnvElement& u) {
  if (!(u.algebra() == a.algebra()))
    throw std::invalid_argument("u_act_right: algebra mismatch");
  MtaElement out(a.algebra());
  for (const auto& [key, f] : a.terms()) {
    const EnvElement moved =
        multiply(EnvElement::word(a.algebra(), key.annihilation), u);
    for (const auto& [w, cf] : moved.terms()) {
      const WordSplit s = split_word(w);
      if (!s.creation.empty()) continue;  // class zero in U / N^1_R U
      out.add_term(MtaKey{key.creation, s.annihilation},
                   f * cf.times_x(s.zeros));
    }
  }
  return out;
}

namespace {

std::vector<MtaKey> identity_search_basis(const AlgebraSpec& alg, unsigned d) {
  std::vector<MtaKey> keys;
  if (alg.kind == AlgebraKind::Heisenberg) {
    for (const auto& r : partitions_of(d))
      for (const auto& s : partitions_of(d))
        keys.push_back(MtaKey{creation_word(r), annihilation_word(s)});
    return keys;
  }
  // Virasoro bases are handled ad hoc at small degree.
  if (d == 0) {
    keys.push_back(MtaKey{});
  } else if (d == 1) {
    keys.push_back(MtaKey{{-1}, {1}});
  } else {
    throw std::invalid_argument(
        "find_identity: Virasoro basis enumeration supported only for d <= 1");
  }
  return keys;
}

MtaElement key_element(const AlgebraSpec& alg, const MtaKey& key) {
  MtaElement e(alg);
  e.add_term(key, Coefficient(1));
  return e;
}

}  // namespace

IdentitySearch find_identity(const AlgebraSpec& alg, unsigned d) {
  IdentitySearch result;
  result.d = d;

  const std::vector<MtaKey> keys = identity_search_basis(alg, d);
  const std::size_t n = keys.size();
  result.basis_size = n;

  std::vector<MtaElement> basis;
  basis.reserve(n);
  for (const auto& key : keys) basis.push_back(key_element(alg, key));

  // Unknown e = sum_k f_k eps_k; constraints e * eps_j = eps_j = eps_j * e,
  // one row per (j, result key) pair.
  Matrix rows;
  std::vector<Coefficient> rhs;
  auto add_constraints = [&](bool left) {
    for (std::size_t j = 0; j < n; ++j) {
      std::map<MtaKey, std::vector<Coefficient>> grouped;
      for (std::size_t k = 0; k < n; ++k) {
        const MtaElement prod =
            left ? star(basis[k], basis[j]) : star(basis[j], basis[k]);
        for (const auto& [key, c] : prod.terms()) {
          auto [it, inserted] =
              grouped.try_emplace(key, std::vector<Coefficient>(n, Coefficient(0)));
          it->second[k] += c;
        }
      }
      // Result keys that never occur need no equation; the target eps_j must
      // occur for solvability, so force its row even if absent.
      grouped.try_emplace(keys[j], std::vector<Coefficient>(n, Coefficient(0)));
      for (auto& [key, row] : grouped) {
        rows.push_back(std::move(row));
        rhs.push_back(key == keys[j] ? Coefficient(1) : Coefficient(0));
      }
    }
  };
  add_constraints(/*left=*/true);
  add_constraints(/*left=*/false);

  const LinearSolution sol = solve_linear_system(rows, rhs);
  if (sol.status == SolveStatus::Inconsistent) {
    result.inconsistent = true;
    return result;
  }
  if (!sol.all_polynomial) {
    result.offending_denominator = sol.offending_denominator;
    return result;
  }

  MtaElement identity(alg);
  for (std::size_t k = 0; k < n; ++k)
    identity += basis[k].scaled(sol.polynomial_values[k]);

  result.exists = true;
  result.verified = true;
  for (std::size_t j = 0; j < n && result.verified; ++j)
    result.verified = star(identity, basis[j]) == basis[j] &&
                      star(basis[j], identity) == basis[j];
  result.identity = std::move(identity);
  return result;
}

ZhuElement mu(const MtaElement& a, unsigned d) {
  const auto bd = a.homogeneous_bidegree();
  if (!a.is_zero() && (!bd || bd->first != d || bd->second != d))
    throw std::invalid_argument("mu: element is not homogeneous of bidegree (d, -d)");
  EnvElement acc(a.algebra());
  for (const auto& [key, f] : a.terms()) {
    for (const auto& [mono, q] : f.terms()) {
      ModeWord w = key.creation;
      w.insert(w.end(), mono.x_exp, 0);  // lift x^k to the zero-mode power
      w.insert(w.end(), key.annihilation.begin(), key.annihilation.end());
      acc.add_term(w, Coefficient::monomial(q, 0, mono.c_exp));
    }
  }
  return zhu_class(acc, d);
}

StrongIdentityReport verify_strong_identity(const AlgebraSpec& alg,
                                            unsigned d_max, int n_window) {
  if (n_window < 0)
    throw std::invalid_argument("verify_strong_identity: n_window must be >= 0");
  StrongIdentityReport rep;
  rep.d_max = d_max;
  rep.n_window = n_window;

  const unsigned top_level = d_max + static_cast<unsigned>(n_window);
  std::vector<MtaElement> identity;
  for (unsigned j = 0; j <= top_level; ++j) {
    IdentitySearch found = find_identity(alg, j);
    if (!found.exists || !found.verified) {
      rep.missing_identity_level = j;
      rep.failure = "no identity element at level " + std::to_string(j);
      return rep;
    }
    identity.push_back(std::move(*found.identity));
  }
  rep.identities_found = true;

  rep.transport_ok = true;
  for (unsigned d = 0; d <= d_max; ++d) {
    for (int n = -n_window; n <= static_cast<int>(d) && n <= n_window; ++n) {
      const EnvElement jn = EnvElement::mode(alg, n);
      const MtaElement lhs = u_act_left(jn, identity[d]);
      const MtaElement rhs = u_act_right(identity[d - n], jn);
      const bool ok = lhs == rhs;
      rep.transport.push_back(StrongIdentityCheck{n, d, ok});
      if (!ok) {
        rep.transport_ok = false;
        if (rep.failure.empty())
          rep.failure = "transport equation failed at n=" + std::to_string(n) +
                        " d=" + std::to_string(d);
      }
    }
  }

  rep.unit_condition_ok = true;
  for (unsigned n = 0; n <= d_max && rep.unit_condition_ok; ++n)
    for (unsigned m = 0; m <= d_max && rep.unit_condition_ok; ++m)
      for (const MtaElement& a : mta_basis(alg, n, m))
        if (!(star(identity[n], a) == a) || !(star(a, identity[m]) == a)) {
          rep.unit_condition_ok = false;
          rep.failure = "two-sided unit condition failed on a basis element of "
                        "bidegree (" + std::to_string(n) + ", -" + std::to_string(m) + ")";
          break;
        }

  rep.ok = rep.identities_found && rep.transport_ok && rep.unit_condition_ok;
  return rep;
}

MtaStructureReport verify_mta_structure(const AlgebraSpec& alg, unsigned d) {
  if (alg.kind != AlgebraKind::Heisenberg)
    throw std::invalid_argument("verify_mta_structure: Heisenberg-only");
  MtaStructureReport rep;
  rep.d = d;

  const auto parts = partitions_of(d);
  const std::size_t p = parts.size();
  rep.basis_size = p * p;
  rep.expected_basis_size = p * p;

  // Multiplication table against the closed form:
  // eps_{r,s} * eps_{u,v} = delta_{s,u} ||u|| eps_{r,v}.
  rep.table_matches_norm_form = true;
  for (std::size_t ri = 0; ri < p && rep.table_matches_norm_form; ++ri)
    for (std::size_t si = 0; si < p && rep.table_matches_norm_form; ++si)
      for (std::size_t ui = 0; ui < p && rep.table_matches_norm_form; ++ui)
        for (std::size_t vi = 0; vi < p; ++vi) {
          const MtaElement lhs =
              star(MtaElement::basis_element(alg, parts[ri], parts[si]),
                   MtaElement::basis_element(alg, parts[ui], parts[vi]));
          MtaElement expected(alg);
          if (si == ui) {
            const mpz_class norm = norm_coefficient(parts[ui]);
            expected = MtaElement::basis_element(alg, parts[ri], parts[vi])
                           .scaled(Coefficient(mpq_class(norm)));
          }
          if (!(lhs == expected)) {
            rep.table_matches_norm_form = false;
            rep.failure = "table mismatch at (" + std::to_string(ri) + "," +
                          std::to_string(si) + ") x (" + std::to_string(ui) + "," +
                          std::to_string(vi) + ")";
            break;
          }
        }

  // Rescaled matrix units e_{rs} = eps_{r,s} / ||s|| obey
  // e_{rs} e_{uv} = delta_{su} e_{rv} exactly over Q.
  auto unit = [&](std::size_t ri, std::size_t si) {
    const mpq_class inv = mpq_class(1) / mpq_class(norm_coefficient(parts[si]));
    return MtaElement::basis_element(alg, parts[ri], parts[si])
        .scaled(Coefficient(inv));
  };
  rep.matrix_units_ok = true;
  for (std::size_t ri = 0; ri < p && rep.matrix_units_ok; ++ri)
    for (std::size_t si = 0; si < p && rep.matrix_units_ok; ++si)
      for (std::size_t ui = 0; ui < p && rep.matrix_units_ok; ++ui)
        for (std::size_t vi = 0; vi < p; ++vi) {
          const MtaElement lhs = star(unit(ri, si), unit(ui, vi));
          const MtaElement expected =
              si == ui ? unit(ri, vi) : MtaElement(alg);
          if (!(lhs == expected)) {
            rep.matrix_units_ok = false;
            rep.failure = "matrix unit relation failed";
            break;
          }
        }

  // The search result should coincide with sum_r eps_{r,r} / ||r||.
  const IdentitySearch found = find_identity(alg, d);
  MtaElement closed_form(alg);
  for (const auto& r : parts) {
    const mpq_class inv = mpq_class(1) / mpq_class(norm_coefficient(r));
    closed_form += MtaElement::basis_element(alg, r, r).scaled(Coefficient(inv));
  }
  rep.identity_matches_closed_form =
      found.exists && found.verified && *found.identity == closed_form;
  if (!rep.identity_matches_closed_form && rep.failure.empty())
    rep.failure = "identity does not match the norm closed form";

  rep.ok = rep.table_matches_norm_form && rep.matrix_units_ok &&
           rep.identity_matches_closed_form;
  return rep;
}

}  // namespace mtakit

#pragma once

#include "satkit/cyclotomic.hpp"
#include "satkit/kato_lusztig.hpp"

namespace satkit {

// An element of the spherical function space: a finite map from dominant
// classes in X_*(T)_I (normal-form coordinates) to Laurent polynomials in
// q^{1/2}.
struct HeckeElement {
  std::map<Vec, QPolynomial> support;

  bool operator==(const HeckeElement& o) const { return support == o.support; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }
};

// The function attached to one IC sheaf, normalized to be pure of weight
// zero: the value on the stratum of lambda-bar is
//   (-1)^{(2rho,mu)} * sum_i dim_i * q^{i - (2rho,mu)/2},
// where dim_i is the stalk dimension in cohomological degree 2i - (2rho,mu).
inline HeckeElement ic_function(const StalkTable& stalks) {
  HeckeElement h;
  bool odd = mpz_odd_p(stalks.ic_pairing.get_mpz_t());
  for (const auto& row : stalks.rows) {
    QPolynomial v;
    for (const auto& [deg, d] : row.dimensions) {
      // degree deg = 2i - (2rho,mu) carries Frobenius trace q^{deg/2}
      v += QPolynomial::monomial(Rat(odd ? -d : d), deg);
    }
    if (!v.is_zero()) h.support[row.stratum] = v;
  }
  return h;
}

// The character basis element: multiplicities at dominant orbit
// representatives, as constant polynomials.
inline HeckeElement char_function(const CoinvariantLattice& cl,
                                  const EchelonCharacter& ch) {
  HeckeElement h;
  for (const auto& [w, m] : ch.weights)
    if (is_dominant(cl, w)) h.support[w] = QPolynomial(Rat(m));
  return h;
}

namespace detail {

// Support element maximizing the 2rho pairing (then lex), i.e. the leading
// term of a triangular Hecke element.
inline Vec leading_class(const CoinvariantLattice& cl,
                         const std::map<Vec, QPolynomial>& support) {
  if (support.empty()) throw singular_change("empty Hecke element");
  const Vec* best = nullptr;
  Int best_p;
  for (const auto& [w, p] : support) {
    Int pw = pairing_2rho(cl, w);
    if (!best || pw > best_p || (pw == best_p && w > *best)) {
      best = &w;
      best_p = pw;
    }
  }
  return *best;
}

}  // namespace detail

// Transition matrix expressing the IC basis in the character basis: returns T
// with ic[i] = sum_j T[i][j] * ch[j]. Both lists are aligned positionally on
// the same downward-closed set of dominant classes. The result must be
// unitriangular with respect to the pairing ordering, with diagonal 1.
inline std::vector<std::vector<QPolynomial>> basis_change(
    const CoinvariantLattice& cl, const std::vector<HeckeElement>& ic_basis,
    const std::vector<HeckeElement>& ch_basis) {
  if (ic_basis.size() != ch_basis.size())
    throw singular_change("basis size mismatch");
  std::size_t n = ch_basis.size();

  std::vector<Vec> labels(n);
  std::map<Vec, std::size_t> index_of;
  for (std::size_t j = 0; j < n; ++j) {
    labels[j] = detail::leading_class(cl, ch_basis[j].support);
    if (ch_basis[j].support.at(labels[j]) != QPolynomial(Rat(1)))
      throw singular_change("character basis leading coefficient is not 1");
    if (!index_of.emplace(labels[j], j).second)
      throw singular_change("repeated index class");
  }

  std::vector<std::vector<QPolynomial>> t(n, std::vector<QPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    // undo the weight-zero twist (-1)^d q^{-d/2} carried by the IC function,
    // so that a consistent input pair yields diagonal exactly 1
    Vec w0 = detail::leading_class(cl, ic_basis[i].support);
    Int p0 = pairing_2rho(cl, w0);
    bool odd0 = mpz_odd_p(p0.get_mpz_t());
    std::map<Vec, QPolynomial> rem;
    for (const auto& [u, q] : ic_basis[i].support) {
      QPolynomial s = q.shifted(p0.get_si());
      rem[u] = odd0 ? s * Rat(-1) : s;
    }
    while (!rem.empty()) {
      Vec w = detail::leading_class(cl, rem);
      auto it = index_of.find(w);
      if (it == index_of.end())
        throw singular_change("leading class outside the index set");
      std::size_t j = it->second;
      QPolynomial c = rem[w];
      t[i][j] = c;
      for (const auto& [u, p] : ch_basis[j].support) {
        QPolynomial& x = rem[u];
        x -= c * p;
        if (x.is_zero()) rem.erase(u);
      }
    }
    if (t[i][i] != QPolynomial(Rat(1)))
      throw singular_change("diagonal entry is not 1");
    Int pi = pairing_2rho(cl, labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || t[i][j].is_zero()) continue;
      Int pj = pairing_2rho(cl, labels[j]);
      if (pj > pi || (pj == pi && !(labels[j] < labels[i])))
        throw singular_change("transition matrix is not triangular");
    }
  }
  return t;
}

// A nonzero monomial value c * q^{k/2} with c in Q(zeta_e); the exponent
// field stores 2k, matching QPolynomial keys.
struct ParamValue {
  Cyclotomic coeff = Cyclotomic(Rat(1));
  long qexp2 = 0;

  ParamValue operator*(const ParamValue& o) const {
    ParamValue r;
    r.coeff = coeff * o.coeff;
    r.qexp2 = qexp2 + o.qexp2;
    return r;
  }
  ParamValue power(const Int& e) const {
    ParamValue r;
    r.coeff = coeff.power(e);
    r.qexp2 = qexp2 * e.get_si();
    return r;
  }
  bool operator==(const ParamValue& o) const {
    return coeff == o.coeff && qexp2 == o.qexp2;
  }
};

// A point of the dual torus: values on the free and torsion generators of
// X_*(T)_I, plus the twisting flag.
struct SatakeParameter {
  std::vector<ParamValue> free_values;
  std::vector<Cyclotomic> torsion_values;
  bool sigma_twisted = false;
};

inline void validate_parameter(const CoinvariantLattice& cl,
                               const SatakeParameter& param) {
  if (param.free_values.size() != cl.quotient.free_rank())
    throw spec_error("parameter has wrong number of free values");
  const auto& ds = cl.quotient.torsion();
  if (param.torsion_values.size() != ds.size())
    throw spec_error("parameter has wrong number of torsion values");
  for (const auto& v : param.free_values)
    if (v.coeff.is_zero()) throw spec_error("free generator value is zero");
  for (std::size_t k = 0; k < ds.size(); ++k)
    if (param.torsion_values[k].power(ds[k]) != Cyclotomic(Rat(1)))
      throw spec_error("torsion value is not a root of unity of the right order");
}

inline ParamValue apply_parameter(const SatakeParameter& param, const Vec& nf) {
  std::size_t f = param.free_values.size();
  ParamValue v;
  for (std::size_t j = 0; j < f; ++j)
    v = v * param.free_values[j].power(nf[j]);
  for (std::size_t k = 0; k < param.torsion_values.size(); ++k) {
    ParamValue t;
    t.coeff = param.torsion_values[k].power(nf[f + k]);
    v = v * t;
  }
  return v;
}

// Trace of the parameter on an irreducible character of the fixed group:
// the sum over the weight multiset of the torus values.
inline CycPoly eval_character(const CoinvariantLattice& cl,
                              const EchelonCharacter& ch,
                              const SatakeParameter& param) {
  if (param.sigma_twisted)
    throw twisted_evaluation_unsupported(
        "twisted evaluation is only provided on the unitary path");
  validate_parameter(cl, param);
  CycPoly total;
  for (const auto& [w, m] : ch.weights) {
    ParamValue v = apply_parameter(param, w);
    total += CycPoly::monomial(v.coeff * Cyclotomic(Rat(m)), v.qexp2);
  }
  return total;
}

namespace detail {

// Orbit of a normal-form class under the relative Weyl group. Each simple
// node orbit contributes the longest element of the parabolic it generates;
// that element commutes with the pinned action, so it descends to X_*(T)_I.
inline std::set<Vec> relative_orbit(const CoinvariantLattice& cl,
                                    const Vec& nf) {
  const RootDatum& rd = cl.datum;
  std::vector<std::vector<std::size_t>> words;
  for (const auto& c : cl.coroot_classes) {
    std::vector<std::size_t> w = c.nodes;
    // an adjacent swapped pair folds through the three-reflection word
    if (w.size() == 2 &&
        dot(rd.simple_roots[w[0]], rd.simple_coroots[w[1]]) != 0)
      w.push_back(w[0]);
    words.push_back(w);
  }
  std::set<Vec> orbit{cl.quotient.normal_form(cl.quotient.lift(nf))};
  std::vector<Vec> queue(orbit.begin(), orbit.end());
  while (!queue.empty()) {
    Vec x = queue.back();
    queue.pop_back();
    for (const auto& word : words) {
      Vec amb = cl.quotient.lift(x);
      for (std::size_t i : word) amb = rd.coreflect(i, amb);
      Vec y = cl.quotient.normal_form(amb);
      if (orbit.insert(y).second) queue.push_back(y);
    }
  }
  return orbit;
}

}  // namespace detail

// Evaluate a Hecke element at an untwisted parameter: each dominant class
// contributes its polynomial times the orbit sum of torus values.
inline CycPoly eval_hecke(const CoinvariantLattice& cl, const HeckeElement& h,
                          const SatakeParameter& param) {
  if (param.sigma_twisted)
    throw twisted_evaluation_unsupported(
        "twisted evaluation is only provided on the unitary path");
  validate_parameter(cl, param);
  CycPoly total;
  for (const auto& [mu, poly] : h.support) {
    CycPoly orbit_sum;
    for (const auto& w : detail::relative_orbit(cl, mu)) {
      ParamValue v = apply_parameter(param, w);
      orbit_sum += CycPoly::monomial(v.coeff, v.qexp2);
    }
    CycPoly p;
    for (const auto& [e2, c] : poly.terms())
      p.terms[e2] = Cyclotomic(c);
    total += p * orbit_sum;
  }
  return total;
}

enum class TwistDirection { geom_to_alg, alg_to_geom };

// The normalization twist between the geometric and classical Satake
// parameters: multiply the torus value on lambda by q^{+-<rho,lambda>}. With
// no q given the twist stays formal in q^{1/2}; with an exact square q the
// multipliers are rational.
inline SatakeParameter normalize_parameter(const CoinvariantLattice& cl,
                                           const SatakeParameter& param,
                                           TwistDirection dir,
                                           const Rat* q_value = nullptr) {
  validate_parameter(cl, param);
  Rat sqrt_q;
  if (q_value) {
    if (*q_value <= 0) throw spec_error("q is not an exact square");
    Int num = (*q_value).get_num(), den = (*q_value).get_den();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den)
      throw spec_error("q is not an exact square");
    sqrt_q = Rat(rn) / Rat(rd);
  }

  std::size_t f = cl.quotient.free_rank();
  std::size_t t = cl.quotient.torsion().size();
  SatakeParameter out = param;
  for (std::size_t j = 0; j < f; ++j) {
    Vec e(f + t, Int(0));
    e[j] = 1;
    Int p = pairing_2rho(cl, e);  // 2<rho, e_j>
    if (dir == TwistDirection::alg_to_geom) p = -p;
    if (q_value)
      out.free_values[j].coeff *= Cyclotomic(Rat(1) * sqrt_q).power(p);
    else
      out.free_values[j].qexp2 += p.get_si();
  }
  for (std::size_t k = 0; k < t; ++k) {
    Vec e(f + t, Int(0));
    e[f + k] = 1;
    if (pairing_2rho(cl, e) != 0)
      throw computation_error("torsion class pairs nontrivially with 2rho");
  }
  return out;
}

}  // namespace satkit

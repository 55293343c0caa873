#pragma once

#include "satkit/echelon_rep.hpp"
#include "satkit/satake.hpp"

namespace satkit {

// The ramified unitary setup: GL_n x GL_1 with the unitary-similitude
// involution, its coinvariant lattice and fixed dual group (GO type for odd
// n, GSp type for even n), both torsion-free with the similitude factor.
struct GUSetup {
  std::size_t n = 0;
  RootDatum datum;
  PinnedAutomorphism theta;
  CoinvariantLattice cl;
  EchelonData ech;
};

namespace detail {

inline GUSetup assemble_gu(std::size_t n) {
  GUSetup s;
  s.n = n;
  s.datum = build_root_datum("GL" + std::to_string(n) + "xGL1");
  s.theta = gu_pinned_action(s.datum);
  s.cl = coweight_coinvariants(s.datum, s.theta);
  s.ech = fold_fixed_group(s.datum, s.theta, s.cl);
  if (!s.cl.quotient.torsion().empty())
    throw computation_error("similitude coinvariants acquired torsion");
  return s;
}

}  // namespace detail

inline GUSetup build_gu_data(std::size_t n) {
  if (n < 3) throw bad_dimension("the hermitian space needs dimension >= 3");
  return detail::assemble_gu(n);
}

// The ambient cocharacter (1^(s), 0^(r); 1) of diag{z^(s), 1^(r)}, z.
inline Vec gu_cocharacter(const GUSetup& g, std::size_t r, std::size_t s) {
  if (r + s != g.n || s > r)
    throw bad_signature("need r + s = n with s <= r");
  Vec mu(g.n + 1, Int(0));
  for (std::size_t i = 0; i < s; ++i) mu[i] = 1;
  mu[g.n] = 1;
  return mu;
}

inline Vec gu_class(const GUSetup& g, std::size_t r, std::size_t s) {
  return g.cl.project(gu_cocharacter(g, r, s));
}

// The highest weight of the summand labeled s' inside Lambda^s tensor
// similitude. Each conjugate pair e_i + e_{n+1-i} dropped when passing from
// s to s' is identified with f in the coinvariants, so the label carries a
// central correction of (s - s')/2 similitude units.
inline Vec gu_summand_class(const GUSetup& g, std::size_t s, std::size_t sp) {
  Vec amb(g.n + 1, Int(0));
  for (std::size_t i = 0; i < sp; ++i) amb[i] = 1;
  amb[g.n] = Int(1 + long(s - sp) / 2);
  return g.cl.project(amb);
}

enum class InertiaCharacter { trivial, quadratic };

inline std::string inertia_name(InertiaCharacter c) {
  return c == InertiaCharacter::trivial ? "trivial" : "quadratic";
}

// The decomposition of the nearby cycle into IC summands with inertia
// characters, and the per-stratum semisimple trace of the inertia-invariant
// part.
struct NearbyCycleReport {
  std::size_t n = 0, r = 0, s = 0;
  struct Summand {
    Vec weight;
    Int dim;
    InertiaCharacter inertia;
  };
  std::vector<Summand> summands;         // decreasing coinvariant dominance
  std::vector<Summand> invariants_part;  // the trivial-inertia sub-list
  bool monodromy_trivial = false;
  struct Stratum {
    Vec weight;
    Int dim;  // stratum dimension (2rho, weight)
    QPolynomial z_value;
  };
  std::vector<Stratum> trace_table;  // filled when traces are requested
};

// The sum of the IC functions of the trivial-inertia summands.
inline HeckeElement z_function(const GUSetup& g, std::size_t r, std::size_t s);

inline NearbyCycleReport nearby_cycle_decomposition(const GUSetup& g,
                                                    std::size_t r,
                                                    std::size_t s,
                                                    bool with_traces = true) {
  NearbyCycleReport rep;
  rep.n = g.n;
  rep.r = r;
  rep.s = s;
  rep.monodromy_trivial = (r != s);

  // predicted highest weights: all of mu_{n-s',s'} with s - s' even and
  // nonnegative for even n, the single mu_{r,s} for odd n
  std::vector<std::size_t> sprimes;
  if (g.n % 2 == 0) {
    for (std::size_t sp = s;; sp -= 2) {
      sprimes.push_back(sp);
      if (sp < 2) break;
    }
  } else {
    sprimes.push_back(s);
  }

  // cross-check against the actual branching of Lambda^s tensor similitude
  BranchingResult br = branch(g.ech, g.cl, g.datum, gu_cocharacter(g, r, s));
  std::map<Vec, Int> predicted;
  for (std::size_t sp : sprimes) predicted[gu_summand_class(g, s, sp)] = 1;
  if (br.summands != predicted)
    throw decomposition_failure("nearby-cycle summands disagree with the branching");

  for (std::size_t sp : sprimes) {
    NearbyCycleReport::Summand sm;
    sm.weight = gu_summand_class(g, s, sp);
    sm.dim = irreducible_character(g.ech, g.cl, sm.weight).dimension;
    sm.inertia = InertiaCharacter::trivial;
    if (r == s && (s - sp) % 4 != 0) sm.inertia = InertiaCharacter::quadratic;
    rep.summands.push_back(sm);
    if (sm.inertia == InertiaCharacter::trivial)
      rep.invariants_part.push_back(sm);
  }

  if (with_traces) {
    HeckeElement z = z_function(g, r, s);
    for (const auto& [w, p] : z.support) {
      NearbyCycleReport::Stratum st;
      st.weight = w;
      st.dim = pairing_2rho(g.cl, w);
      // semisimple-trace normalization per stratum
      long d = st.dim.get_si();
      st.z_value = p.shifted(d) * Rat(d % 2 == 0 ? 1 : -1);
      rep.trace_table.push_back(st);
    }
    std::sort(rep.trace_table.begin(), rep.trace_table.end(),
              [](const NearbyCycleReport::Stratum& a,
                 const NearbyCycleReport::Stratum& b) {
                if (a.dim != b.dim) return a.dim > b.dim;
                return a.weight < b.weight;
              });
  }
  return rep;
}

inline HeckeElement z_function(const GUSetup& g, std::size_t r,
                               std::size_t s) {
  NearbyCycleReport rep = nearby_cycle_decomposition(g, r, s, false);
  HeckeElement z;
  for (const auto& sm : rep.invariants_part) {
    HeckeElement a = ic_function(ic_stalk_table(g.ech, g.cl, sm.weight));
    for (const auto& [w, p] : a.support) {
      QPolynomial& x = z.support[w];
      x += p;
      if (x.is_zero()) z.support.erase(w);
    }
  }
  return z;
}

namespace detail {

// first monomial where two polynomials differ, for failure messages
inline std::string first_mismatch(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly d = a - b;
  if (d.terms.empty()) return "";
  const auto& [e, c] = *d.terms.begin();
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (i ? "," : "") + std::to_string(e[i]);
  return s + ") : " + c.to_string();
}

inline void require_identity(const MultiPoly& a, const MultiPoly& b,
                             const std::string& what) {
  if (a != b)
    throw identity_failure(what + "; first mismatch at " +
                           first_mismatch(a, b));
}

}  // namespace detail

// Witness polynomials for the twisted-trace identities. The abstract side
// lives in independent variables (eps, eps_1..eps_m); the representation side
// lives in the free coordinates of the similitude coinvariant lattice.
struct TwistedTraceWitness {
  bool ok = false;
  MultiPoly lhs_at_i;      // sum a_k zeta_4^k, abstract variables
  MultiPoly rhs_at_i;      // zeta_4^m (a_m - 2a_{m-2} + 2a_{m-4} - ...)
  MultiPoly orbit_trace;   // trace of g. on the pairless wedge basis
  MultiPoly signed_sum;    // sum of +-ch(W) under the 4 | m - m' rule
};

inline TwistedTraceWitness twisted_trace_check(std::size_t m) {
  if (m < 1) throw bad_dimension("need m >= 1");
  std::size_t n = 2 * m;
  Cyclotomic i4 = Cyclotomic::zeta(4);
  Cyclotomic one(Rat(1));

  // abstract identity in independent variables eps, eps_1..eps_m: expand
  // eps prod (1 + eps_j T)(1 + eps_j^{-1} T) as sum a_k T^k
  std::size_t nv = m + 1;
  auto mono = [&](long e0, std::size_t j, long ej) {
    std::vector<long> e(nv, 0);
    e[0] = e0;
    if (j > 0) e[j] += ej;
    return MultiPoly::monomial(one, e);
  };
  std::vector<MultiPoly> a;
  a.push_back(mono(1, 0, 0));  // eps
  for (std::size_t j = 1; j <= m; ++j) {
    for (long sign : {1L, -1L}) {
      std::vector<MultiPoly> next(a.size() + 1);
      for (std::size_t k = 0; k < a.size(); ++k) {
        next[k] += a[k];
        next[k + 1] += a[k] * mono(0, j, sign);
      }
      a = std::move(next);
    }
  }
  // palindromy a_{m+i} = a_{m-i}
  for (std::size_t i = 1; i <= m; ++i)
    detail::require_identity(a[m + i], a[m - i], "palindromy of the a_k");

  TwistedTraceWitness w;
  for (std::size_t k = 0; k < a.size(); ++k)
    w.lhs_at_i += a[k] * MultiPoly::constant(nv, i4.power(Int(k)));

  // zeta_4^m eps prod (eps_j + eps_j^{-1})
  MultiPoly closed = MultiPoly::constant(nv, i4.power(Int(m))) * mono(1, 0, 0);
  for (std::size_t j = 1; j <= m; ++j)
    closed = closed * (mono(0, j, 1) + mono(0, j, -1));
  detail::require_identity(w.lhs_at_i, closed,
                           "product formula at T = zeta_4");

  w.rhs_at_i = a[m];
  for (std::size_t j = 1; 2 * j <= m; ++j) {
    Rat c(j % 2 == 0 ? 2 : -2);
    w.rhs_at_i += a[m - 2 * j] * MultiPoly::constant(nv, Cyclotomic(c));
  }
  w.rhs_at_i = w.rhs_at_i * MultiPoly::constant(nv, i4.power(Int(m)));
  detail::require_identity(w.lhs_at_i, w.rhs_at_i,
                           "alternating form at T = zeta_4");

  // the sign rule in abstract variables: the signed sum of a_s - a_{s-2}
  // recovers eps prod (eps_j + eps_j^{-1})
  MultiPoly abstract_sum;
  for (std::size_t sp = m;; sp -= 2) {
    MultiPoly ch = a[sp];
    if (sp >= 2) ch = ch - a[sp - 2];
    if ((m - sp) % 4 != 0)
      ch = ch * MultiPoly::constant(nv, Cyclotomic(Rat(-1)));
    abstract_sum += ch;
    if (sp < 2) break;
  }
  MultiPoly target = mono(1, 0, 0);
  for (std::size_t j = 1; j <= m; ++j)
    target = target * (mono(0, j, 1) + mono(0, j, -1));
  detail::require_identity(abstract_sum, target, "abstract sign rule");

  // representation side, in the free coordinates of X_*(T)_I: the trace of g
  // on Lambda^m is supported on the wedge vectors without a conjugate pair
  GUSetup g = detail::assemble_gu(n);
  std::size_t f = g.cl.quotient.free_rank();
  auto class_mono = [&](const Vec& ambient) {
    Vec nf = g.cl.project(ambient);
    std::vector<long> e(f);
    for (std::size_t i = 0; i < f; ++i) e[i] = nf[i].get_si();
    return MultiPoly::monomial(one, e);
  };

  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    bool pairless = true;
    for (std::size_t i = 0; i < m && pairless; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (idx[i] + idx[j] == n - 1) {
          pairless = false;
          break;
        }
    if (pairless) {
      Vec amb(n + 1, Int(0));
      for (std::size_t i : idx) amb[i] = 1;
      amb[n] = 1;
      w.orbit_trace += class_mono(amb);
    }
    std::size_t p = m;
    while (p > 0 && idx[p - 1] == n - m + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t i = p; i < m; ++i) idx[i] = idx[i - 1] + 1;
  }

  for (std::size_t sp = m;; sp -= 2) {
    auto ch = irreducible_character(g.ech, g.cl, gu_summand_class(g, m, sp));
    MultiPoly chp;
    for (const auto& [wt, mult] : ch.weights) {
      std::vector<long> e(f);
      for (std::size_t i = 0; i < f; ++i) e[i] = wt[i].get_si();
      chp += MultiPoly::monomial(Cyclotomic(Rat(mult)), e);
    }
    if ((m - sp) % 4 != 0)
      chp = chp * MultiPoly::constant(f, Cyclotomic(Rat(-1)));
    w.signed_sum += chp;
    if (sp < 2) break;
  }
  detail::require_identity(w.signed_sum, w.orbit_trace,
                           "sign rule against the branching characters");

  w.ok = true;
  return w;
}

}  // namespace satkit

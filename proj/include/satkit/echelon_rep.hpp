#pragma once

#include "satkit/galois_fold.hpp"

namespace satkit {

// An irreducible character of the fixed group, as a weight multiset over
// X_*(T)_I in normal-form coordinates.
struct EchelonCharacter {
  Vec highest_weight;
  WeightMultiset weights;
  Int dimension = 0;
};

struct BranchingResult {
  Vec source;                  // dominant weight of H
  std::map<Vec, Int> summands;  // lambda-bar -> multiplicity
};

inline EchelonCharacter irreducible_character(const EchelonData& ech,
                                              const CoinvariantLattice& cl,
                                              const Vec& mu_bar) {
  Vec mu = cl.quotient.reduce(mu_bar);
  if (!is_dominant(cl, mu)) throw not_dominant("highest weight not dominant");
  if (!ech.torsion_lift_deterministic)
    throw ambiguous_torsion_lift(
        "free parts of the coroot classes are dependent");

  Vec mu_free = cl.quotient.free_part(mu);
  Vec mu_tor = cl.quotient.torsion_part(mu);
  WeightMultiset folded = weyl_character(ech.folded, mu_free);

  EchelonCharacter ch;
  ch.highest_weight = mu;
  std::size_t k = cl.coroot_classes.size();
  for (const auto& [w, c] : folded) {
    // coordinates of mu_free - w in the folded simple roots; unique since the
    // free parts are independent, and integral for weights of W
    bool in_span = false;
    auto t = detail::simple_root_coordinates(ech.folded, vec_sub(mu_free, w),
                                             &in_span);
    if (!in_span)
      throw computation_error("folded weight outside the root span");
    Vec torsion = mu_tor;
    for (std::size_t j = 0; j < k; ++j) {
      if (t[j].get_den() != 1)
        throw computation_error("non-integral folded root coordinates");
      for (std::size_t i = 0; i < torsion.size(); ++i)
        torsion[i] -= t[j].get_num() * cl.coroot_classes[j].torsion_part[i];
    }
    const auto& ds = cl.quotient.torsion();
    for (std::size_t i = 0; i < torsion.size(); ++i)
      mpz_fdiv_r(torsion[i].get_mpz_t(), torsion[i].get_mpz_t(),
                 ds[i].get_mpz_t());
    Vec full = w;
    full.insert(full.end(), torsion.begin(), torsion.end());
    ch.weights[full] += c;
    ch.dimension += c;
  }
  return ch;
}

inline WeightMultiset restrict_character(const CoinvariantLattice& cl,
                                         const RootDatum& rd, const Vec& mu) {
  WeightMultiset ch = weyl_character(rd, mu);
  WeightMultiset out;
  for (const auto& [w, c] : ch) out[cl.project(w)] += c;
  return out;
}

inline BranchingResult branch(const EchelonData& ech,
                              const CoinvariantLattice& cl,
                              const RootDatum& rd, const Vec& mu) {
  BranchingResult res;
  res.source = mu;
  WeightMultiset rest = restrict_character(cl, rd, mu);
  while (!rest.empty()) {
    // pick the dominant class maximizing the 2rho pairing (such a class is
    // maximal for the partial order), tie-break lexicographically smallest
    bool found = false;
    Vec best;
    Int best_pairing = 0;
    for (const auto& [w, c] : rest) {
      if (c == 0 || !is_dominant(cl, w)) continue;
      Int p = pairing_2rho(cl, w);
      if (!found || p > best_pairing || (p == best_pairing && w < best)) {
        found = true;
        best = w;
        best_pairing = p;
      }
    }
    if (!found)
      throw decomposition_failure("no dominant weight left in the remainder");
    Int c = rest[best];
    if (c < 0)
      throw decomposition_failure("negative multiplicity at " +
                                  vec_to_string(best));
    EchelonCharacter w = irreducible_character(ech, cl, best);
    for (const auto& [x, m] : w.weights) {
      auto it = rest.find(x);
      if (it == rest.end() || it->second < c * m)
        throw decomposition_failure("subtraction would go negative at " +
                                    vec_to_string(x));
      it->second -= c * m;
      if (it->second == 0) rest.erase(it);
    }
    res.summands[best] = c;
  }
  return res;
}

}  // namespace satkit

#pragma once

#include "satkit/echelon_rep.hpp"
#include "satkit/matrix_model.hpp"
#include "satkit/qpoly.hpp"

namespace satkit {

// Memoized q-analog partition machinery for one root datum.
class KatoContext {
 public:
  explicit KatoContext(const RootDatum& rd) : rd_(rd), w_(weyl_group(rd)) {}

  const RootDatum& datum() const { return rd_; }
  const WeylGroup& weyl() const { return w_; }

  // q-analog Kostant partition function: sum over multisets of positive
  // roots adding up to beta, weighted by q^{number of parts}.
  QPolynomial q_kostant(const Vec& beta) {
    bool in_span = false;
    auto t = detail::simple_root_coordinates(rd_, beta, &in_span);
    if (!in_span) return QPolynomial();
    Vec coords(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].get_den() != 1 || t[i] < 0) return QPolynomial();
      coords[i] = t[i].get_num();
    }
    if (root_coords_.empty()) {
      for (const auto& r : rd_.positive_roots) {
        auto rc = detail::simple_root_coordinates(rd_, r);
        Vec v(rc.size());
        for (std::size_t i = 0; i < rc.size(); ++i) v[i] = rc[i].get_num();
        root_coords_.push_back(v);
      }
    }
    return partition(0, coords);
  }

  // Lusztig's alternating sum: sum_w (-1)^{l(w)} P_q(w(lambda+rho)-(mu+rho)).
  QPolynomial kato_lusztig(const Vec& lambda, const Vec& mu) {
    if (!rd_.is_dominant_weight(lambda) || !rd_.is_dominant_weight(mu))
      throw not_dominant("Lusztig sum needs dominant weights");
    QPolynomial out;
    for (std::size_t i = 0; i < w_.order(); ++i) {
      // w(lambda + rho) - (mu + rho) = w(lambda) - mu + (w(2rho) - 2rho)/2
      Vec shift2 = vec_sub(w_.elements[i].apply(rd_.two_rho), rd_.two_rho);
      Vec arg = vec_sub(w_.elements[i].apply(lambda), mu);
      for (std::size_t c = 0; c < arg.size(); ++c) {
        if (shift2[c] % 2 != 0)
          throw computation_error("odd rho shift in the Lusztig sum");
        arg[c] += shift2[c] / 2;
      }
      QPolynomial p = q_kostant(arg);
      if (w_.lengths[i] % 2 == 0)
        out += p;
      else
        out -= p;
    }
    return out;
  }

 private:
  QPolynomial partition(std::size_t idx, const Vec& target) {
    if (is_zero(target)) return QPolynomial(Rat(1));
    if (idx >= root_coords_.size()) return QPolynomial();
    auto key = std::make_pair(idx, target);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    QPolynomial total;
    Vec rest = target;
    long k = 0;
    for (;;) {
      QPolynomial sub = partition(idx + 1, rest);
      if (!sub.is_zero()) total += sub.shifted(2 * k);
      bool ok = true;
      for (std::size_t c = 0; c < rest.size(); ++c) {
        rest[c] -= root_coords_[idx][c];
        if (rest[c] < 0) ok = false;
      }
      if (!ok) break;
      ++k;
    }
    memo_[key] = total;
    return total;
  }

  RootDatum rd_;
  WeylGroup w_;
  std::vector<Vec> root_coords_;  // positive roots in simple-root coordinates
  std::map<std::pair<std::size_t, Vec>, QPolynomial> memo_;
};

inline QPolynomial q_kostant(const RootDatum& fd, const Vec& beta) {
  return KatoContext(fd).q_kostant(beta);
}

inline QPolynomial kato_lusztig_poly(const RootDatum& fd, const Vec& lambda,
                                     const Vec& mu) {
  return KatoContext(fd).kato_lusztig(lambda, mu);
}

// IC stalk table over the closure strata of one orbit.
struct StalkTable {
  Vec ic_label;      // dominant class in X_*(T)_I, normal form
  Int ic_pairing;    // (2rho, ic_label)
  struct Row {
    Vec stratum;     // dominant class, normal form
    Int pairing;     // (2rho, stratum)
    QPolynomial poly;               // Lusztig polynomial P(q)
    std::map<long, Int> dimensions; // cohomological degree -> dimension
  };
  std::vector<Row> rows;
};

inline StalkTable ic_stalk_table(const EchelonData& ech,
                                 const CoinvariantLattice& cl,
                                 const Vec& mu_bar) {
  Vec mu = cl.quotient.reduce(mu_bar);
  if (!is_dominant(cl, mu)) throw not_dominant("IC label not dominant");
  if (!ech.torsion_lift_deterministic)
    throw ambiguous_torsion_lift(
        "free parts of the coroot classes are dependent");

  StalkTable table;
  table.ic_label = mu;
  table.ic_pairing = pairing_2rho(cl, mu);
  KatoContext ctx(ech.folded);
  Vec mu_free = cl.quotient.free_part(mu);

  for (const auto& lam : closure_strata(cl, mu)) {
    StalkTable::Row row;
    row.stratum = lam;
    row.pairing = pairing_2rho(cl, lam);
    // torsion compatibility: the lift determined by the free coordinates must
    // reproduce lam's torsion (closure_strata guarantees this; enforce anyway)
    std::vector<Int> coords;
    if (!coroot_class_coordinates(cl, lam, mu, coords)) continue;
    row.poly = ctx.kato_lusztig(mu_free, cl.quotient.free_part(lam));
    for (const auto& [e2, c] : row.poly.terms()) {
      if (e2 % 2 != 0 || c.get_den() != 1)
        throw computation_error("stalk polynomial is not classical");
      long i = e2 / 2;
      row.dimensions[2 * i - table.ic_pairing.get_si()] = c.get_num();
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace satkit

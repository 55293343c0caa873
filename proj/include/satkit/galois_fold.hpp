#pragma once

#include "satkit/abelian.hpp"
#include "satkit/root_datum.hpp"

namespace satkit {

// A finite-order automorphism of a root datum fixing a pinning: it permutes
// the simple roots (dual action) and the simple coroots compatibly.
struct PinnedAutomorphism {
  IntMatrix cochar_map;            // action on X_*(T)
  IntMatrix char_map;              // inverse-transpose action on X^*(T)
  std::vector<std::size_t> node_perm;  // induced permutation of simple nodes
  int order = 1;
};

namespace detail {

inline PinnedAutomorphism finish_pinned(const RootDatum& rd, IntMatrix cochar,
                                        int declared_order) {
  PinnedAutomorphism psi;
  psi.cochar_map = cochar;
  psi.char_map = cochar.inverse_unimodular().transpose();
  psi.node_perm.assign(rd.num_nodes(), 0);
  for (std::size_t j = 0; j < rd.num_nodes(); ++j) {
    Vec r = psi.char_map.apply(rd.simple_roots[j]);
    Vec rv = psi.cochar_map.apply(rd.simple_coroots[j]);
    bool found = false;
    for (std::size_t k = 0; k < rd.num_nodes(); ++k)
      if (rd.simple_roots[k] == r) {
        if (rd.simple_coroots[k] != rv)
          throw not_diagram_automorphism(
              "simple roots and coroots permute incompatibly");
        psi.node_perm[j] = k;
        found = true;
        break;
      }
    if (!found)
      throw not_diagram_automorphism("map does not permute the simple roots");
  }
  psi.order = matrix_order(cochar);
  if (declared_order > 0 && declared_order != psi.order)
    throw order_mismatch("declared order " + std::to_string(declared_order) +
                         " but actual order is " + std::to_string(psi.order));
  return psi;
}

}  // namespace detail

// Lattice realization of a Dynkin-diagram automorphism given as a node
// permutation (indices into rd's global node list, factor-preserving).
inline PinnedAutomorphism pinned_action(const RootDatum& rd,
                                        const std::vector<std::size_t>& perm,
                                        int declared_order = 0) {
  if (perm.size() != rd.num_nodes())
    throw spec_error("node permutation has wrong length");
  for (std::size_t j = 0; j < perm.size(); ++j)
    if (perm[j] >= perm.size())
      throw spec_error("node permutation out of range");
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j)
      if (rd.cartan(perm[i], perm[j]) != rd.cartan(i, j))
        throw not_diagram_automorphism(
            "permutation does not preserve the Cartan matrix");

  IntMatrix cochar(rd.rank, rd.rank);
  for (const auto& f : rd.factors) {
    // the permutation must keep each factor's node range
    for (std::size_t j = f.node_begin; j < f.node_begin + f.node_count; ++j)
      if (perm[j] < f.node_begin || perm[j] >= f.node_begin + f.node_count)
        throw not_diagram_automorphism(
            "node permutation does not preserve the product factors");
    bool identity_on_factor = true;
    for (std::size_t j = f.node_begin; j < f.node_begin + f.node_count; ++j)
      if (perm[j] != j) identity_on_factor = false;

    switch (f.family) {
      case Family::GL1:
        cochar.at(f.coord_begin, f.coord_begin) = 1;
        break;
      case Family::GL: {
        std::size_t n = f.coord_count;
        bool reversal = true;
        for (std::size_t j = 0; j + 1 < n; ++j)
          if (perm[f.node_begin + j] != f.node_begin + (n - 2 - j))
            reversal = false;
        if (identity_on_factor) {
          for (std::size_t i = 0; i < n; ++i)
            cochar.at(f.coord_begin + i, f.coord_begin + i) = 1;
        } else if (reversal) {
          // e_i -> -e_{n+1-i}
          for (std::size_t i = 0; i < n; ++i)
            cochar.at(f.coord_begin + (n - 1 - i), f.coord_begin + i) = -1;
        } else {
          throw not_diagram_automorphism("unsupported GL_n node permutation");
        }
        break;
      }
      case Family::SL: {
        std::size_t n = f.coord_count + 1;
        bool reversal = true;
        for (std::size_t j = 0; j + 1 < n; ++j)
          if (perm[f.node_begin + j] != f.node_begin + (n - 2 - j))
            reversal = false;
        if (identity_on_factor) {
          for (std::size_t i = 0; i < n - 1; ++i)
            cochar.at(f.coord_begin + i, f.coord_begin + i) = 1;
        } else if (reversal) {
          // On X_* = {v in Z^n : sum v = 0} with basis e_i - e_n the
          // reversal v -> -rev(v) sends e_i - e_n to e_1 - e_{n+1-i}.
          for (std::size_t b = 0; b + 1 < n; ++b) {
            cochar.at(f.coord_begin, f.coord_begin + b) += 1;
            if (b >= 1)
              cochar.at(f.coord_begin + (n - 1 - b), f.coord_begin + b) -= 1;
          }
        } else {
          throw not_diagram_automorphism("unsupported SL_n node permutation");
        }
        break;
      }
      case Family::SimplyConnected:
      case Family::Adjoint: {
        // cochar basis = coroots (sc) or roots' dual basis (adjoint); in both
        // realizations the lattice map induced by the node permutation is the
        // permutation matrix itself.
        for (std::size_t j = 0; j < f.node_count; ++j) {
          std::size_t a = perm[f.node_begin + j] - f.node_begin;
          cochar.at(f.coord_begin + a, f.coord_begin + j) = 1;
        }
        break;
      }
      case Family::Folded:
        if (!identity_on_factor)
          throw not_diagram_automorphism(
              "nontrivial actions on folded data are not supported");
        for (std::size_t i = 0; i < f.coord_count; ++i)
          cochar.at(f.coord_begin + i, f.coord_begin + i) = 1;
        break;
    }
  }
  return detail::finish_pinned(rd, cochar, declared_order);
}

// The lattice reversal e_i -> -e_{n+1-i} on each GL factor and negation on
// each GL1 factor (the duality involution). Coincides with
// pinned_action(reversal_permutation) on GL_n for n >= 3; needed separately
// for GL_2, whose node permutation is the identity.
inline PinnedAutomorphism gl_reversal_action(const RootDatum& rd,
                                             int declared_order = 0) {
  IntMatrix cochar(rd.rank, rd.rank);
  for (const auto& f : rd.factors) {
    switch (f.family) {
      case Family::GL:
        for (std::size_t i = 0; i < f.coord_count; ++i)
          cochar.at(f.coord_begin + (f.coord_count - 1 - i),
                    f.coord_begin + i) = -1;
        break;
      case Family::GL1:
        cochar.at(f.coord_begin, f.coord_begin) = -1;
        break;
      default:
        throw spec_error("the duality reversal needs GL and GL1 factors");
    }
  }
  return detail::finish_pinned(rd, cochar, declared_order);
}

inline std::vector<std::size_t> identity_permutation(const RootDatum& rd) {
  std::vector<std::size_t> p(rd.num_nodes());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  return p;
}

inline std::vector<std::size_t> reversal_permutation(const RootDatum& rd) {
  std::vector<std::size_t> p(rd.num_nodes());
  for (const auto& f : rd.factors)
    for (std::size_t j = 0; j < f.node_count; ++j)
      p[f.node_begin + j] = f.node_begin + (f.node_count - 1 - j);
  return p;
}

// The unitary-similitude automorphism of GL_n x GL_1:
// e_i -> f - e_{n+1-i}, f -> f.
inline PinnedAutomorphism gu_pinned_action(const RootDatum& rd,
                                           int declared_order = 0) {
  if (rd.factors.size() != 2 || rd.factors[0].family != Family::GL ||
      rd.factors[1].family != Family::GL1)
    throw spec_error("the GU recipe needs a GLnxGL1 datum");
  std::size_t n = rd.factors[0].coord_count;
  std::size_t fc = rd.factors[1].coord_begin;
  IntMatrix cochar(rd.rank, rd.rank);
  for (std::size_t i = 0; i < n; ++i) {
    cochar.at(n - 1 - i, i) = -1;
    cochar.at(fc, i) = 1;
  }
  cochar.at(fc, fc) = 1;
  return detail::finish_pinned(rd, cochar, declared_order);
}

// The coinvariant coweight lattice X_*(T)_I together with the data needed for
// dominance, the partial order, and stratum dimensions.
struct CoinvariantLattice {
  RootDatum datum;  // the ambient datum of H
  PinnedAutomorphism psi;
  FgAbelianGroup quotient;
  std::vector<Vec> relative_positive_roots;  // orbit-sums, character side
  Vec two_rho;

  struct CorootClass {
    Vec nf;            // class of the orbit's coroots in X_*(T)_I
    Vec free_part;
    Vec torsion_part;
    std::vector<std::size_t> nodes;  // the simple-node orbit
  };
  std::vector<CorootClass> coroot_classes;

  Vec project(const Vec& coweight) const {
    return quotient.normal_form(coweight);
  }
};

inline CoinvariantLattice coweight_coinvariants(const RootDatum& rd,
                                                const PinnedAutomorphism& psi) {
  CoinvariantLattice cl;
  cl.datum = rd;
  cl.psi = psi;
  IntMatrix rel = IntMatrix::identity(rd.rank) - psi.cochar_map;
  cl.quotient = FgAbelianGroup(rd.rank, rel);
  cl.two_rho = rd.two_rho;

  // orbit-sums of positive roots under the character action
  std::set<Vec> done;
  for (const auto& beta : rd.positive_roots) {
    if (done.count(beta)) continue;
    Vec sum(rd.rank, Int(0));
    Vec cur = beta;
    do {
      done.insert(cur);
      sum = vec_add(sum, cur);
      cur = psi.char_map.apply(cur);
    } while (cur != beta);
    cl.relative_positive_roots.push_back(sum);
  }

  // simple-coroot orbits and their common classes
  std::vector<bool> seen(rd.num_nodes(), false);
  for (std::size_t j = 0; j < rd.num_nodes(); ++j) {
    if (seen[j]) continue;
    CoinvariantLattice::CorootClass c;
    std::size_t k = j;
    do {
      seen[k] = true;
      c.nodes.push_back(k);
      k = psi.node_perm[k];
    } while (k != j);
    c.nf = cl.quotient.normal_form(rd.simple_coroots[j]);
    for (std::size_t node : c.nodes)
      if (cl.quotient.normal_form(rd.simple_coroots[node]) != c.nf)
        throw computation_error(
            "coroot orbit members project to different classes");
    c.free_part = cl.quotient.free_part(c.nf);
    c.torsion_part = cl.quotient.torsion_part(c.nf);
    cl.coroot_classes.push_back(c);
  }
  return cl;
}

inline bool is_dominant(const CoinvariantLattice& cl, const Vec& nf) {
  Vec lift = cl.quotient.lift(nf);
  for (const auto& a : cl.relative_positive_roots)
    if (dot(a, lift) < 0) return false;
  return true;
}

inline Int pairing_2rho(const CoinvariantLattice& cl, const Vec& nf) {
  return dot(cl.two_rho, cl.quotient.lift(nf));
}

namespace detail {

// Try to express diff as a nonnegative integer combination of the coroot
// classes. Unique when the free parts are linearly independent; otherwise a
// bounded exhaustive search (every class pairs to 2 against 2rho, so the
// coordinate sum is pinned).
inline bool coroot_cone_membership(const CoinvariantLattice& cl,
                                   const Vec& diff, std::vector<Int>* coords,
                                   bool* ambiguous) {
  std::size_t k = cl.coroot_classes.size();
  if (ambiguous) *ambiguous = false;
  Int p = pairing_2rho(cl, diff);
  if (p < 0 || p % 2 != 0) return false;
  if (k == 0) return is_zero(diff);

  std::size_t f = cl.quotient.free_rank();
  IntMatrix fmat(f, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < f; ++i)
      fmat.at(i, j) = cl.coroot_classes[j].free_part[i];

  if (rank_q(fmat) == k) {
    // unique rational solution of fmat * n = free(diff)
    std::vector<std::vector<Rat>> a(f, std::vector<Rat>(k + 1));
    Vec fd = cl.quotient.free_part(diff);
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(fmat.at(i, j));
      a[i][k] = Rat(fd[i]);
    }
    std::size_t row = 0;
    std::vector<long> pivot(k, -1);
    for (std::size_t col = 0; col < k && row < f; ++col) {
      std::size_t piv = row;
      while (piv < f && a[piv][col] == 0) ++piv;
      if (piv == f) continue;
      std::swap(a[row], a[piv]);
      for (std::size_t i = 0; i < f; ++i) {
        if (i == row || a[i][col] == 0) continue;
        Rat fac = a[i][col] / a[row][col];
        for (std::size_t j = col; j <= k; ++j) a[i][j] -= fac * a[row][j];
      }
      pivot[col] = static_cast<long>(row);
      ++row;
    }
    std::vector<Int> n(k);
    for (std::size_t col = 0; col < k; ++col) {
      Rat v = a[pivot[col]][k] / a[pivot[col]][col];
      v.canonicalize();
      if (v.get_den() != 1 || v.get_num() < 0) return false;
      n[col] = v.get_num();
    }
    // consistency rows (f > k) and the torsion congruence
    Vec acc = cl.quotient.zero_nf();
    for (std::size_t j = 0; j < k; ++j)
      acc = cl.quotient.nf_add(acc,
                               cl.quotient.nf_scale(n[j], cl.coroot_classes[j].nf));
    if (acc != cl.quotient.reduce(diff)) return false;
    if (coords) *coords = n;
    return true;
  }

  if (ambiguous) *ambiguous = true;
  // exhaustive: sum of coordinates is exactly p/2
  Int total = p / 2;
  std::vector<Int> n(k, Int(0));
  std::function<bool(std::size_t, Int)> rec = [&](std::size_t j,
                                                  Int remaining) -> bool {
    if (j + 1 == k) {
      n[j] = remaining;
      Vec acc = cl.quotient.zero_nf();
      for (std::size_t i = 0; i < k; ++i)
        acc = cl.quotient.nf_add(
            acc, cl.quotient.nf_scale(n[i], cl.coroot_classes[i].nf));
      return acc == cl.quotient.reduce(diff);
    }
    for (n[j] = 0; n[j] <= remaining; ++n[j])
      if (rec(j + 1, remaining - n[j])) return true;
    n[j] = 0;
    return false;
  };
  if (!rec(0, total)) return false;
  if (coords) *coords = n;
  return true;
}

}  // namespace detail

inline bool order_leq(const CoinvariantLattice& cl, const Vec& lambda,
                      const Vec& mu, bool* ambiguous = nullptr) {
  Vec diff = cl.quotient.nf_sub(mu, lambda);
  return detail::coroot_cone_membership(cl, diff, nullptr, ambiguous);
}

// Coordinates of mu - lambda in the coroot classes, if it lies in the cone.
inline bool coroot_class_coordinates(const CoinvariantLattice& cl,
                                     const Vec& lambda, const Vec& mu,
                                     std::vector<Int>& coords,
                                     bool* ambiguous = nullptr) {
  Vec diff = cl.quotient.nf_sub(mu, lambda);
  return detail::coroot_cone_membership(cl, diff, &coords, ambiguous);
}

// All dominant lambda-bar with lambda-bar <= mu-bar, sorted by stratum
// dimension (2rho pairing) descending, then lexicographically.
inline std::vector<Vec> closure_strata(const CoinvariantLattice& cl,
                                       const Vec& mu) {
  if (!is_dominant(cl, mu)) throw not_dominant("stratum label not dominant");
  Int p = pairing_2rho(cl, mu);
  std::size_t k = cl.coroot_classes.size();
  std::set<Vec> found;
  std::vector<Int> n(k, Int(0));
  std::function<void(std::size_t, Int, Vec)> rec = [&](std::size_t j,
                                                       Int budget, Vec cur) {
    if (j == k) {
      if (is_dominant(cl, cur)) found.insert(cur);
      return;
    }
    Vec x = cur;
    for (Int t = 0; t <= budget; ++t) {
      rec(j + 1, budget - t, x);
      x = cl.quotient.nf_sub(x, cl.coroot_classes[j].nf);
    }
  };
  rec(0, p / 2, cl.quotient.reduce(mu));
  std::vector<Vec> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    Int pa = pairing_2rho(cl, a), pb = pairing_2rho(cl, b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  return out;
}

namespace detail {

// Averaged rational lift of a free-quotient vector: section of the projection
// landing in the psi-invariant subspace of Q tensor X_*(T).
inline std::vector<std::vector<Rat>> averaged_lift_basis(
    const CoinvariantLattice& cl) {
  std::size_t f = cl.quotient.free_rank();
  std::size_t n = cl.datum.rank;
  std::size_t t = cl.quotient.torsion().size();
  std::vector<std::vector<Rat>> basis(f, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < f; ++i) {
    Vec nf(f + t, Int(0));
    nf[i] = 1;
    Vec lift = cl.quotient.lift(nf);
    Vec cur = lift;
    Vec sum(n, Int(0));
    for (int e = 0; e < cl.psi.order; ++e) {
      sum = vec_add(sum, cur);
      cur = cl.psi.cochar_map.apply(cur);
    }
    for (std::size_t c = 0; c < n; ++c)
      basis[i][c] = Rat(sum[c], cl.psi.order);
  }
  return basis;
}

// W- and psi-invariant form on Q tensor X_*(T): sum over all roots beta of
// <beta, v><beta, w>.
inline Rat root_sum_form(const RootDatum& rd, const std::vector<Rat>& v,
                         const std::vector<Rat>& w) {
  Rat s(0);
  for (const auto& beta : rd.positive_roots) {
    Rat pv(0), pw(0);
    for (std::size_t c = 0; c < rd.rank; ++c) {
      pv += Rat(beta[c]) * v[c];
      pw += Rat(beta[c]) * w[c];
    }
    s += pv * pw;
  }
  return s * 2;
}

// Identify a connected Cartan matrix block against the classical series,
// preferring an order-preserving match (this resolves the B2/C2 labeling
// ambiguity in favor of the natural node order).
inline std::string classify_component(const RootDatum& rd,
                                      const std::vector<std::size_t>& nodes) {
  std::size_t r = nodes.size();
  std::vector<char> letters;
  for (char l : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) letters.push_back(l);
  auto matches = [&](const std::vector<std::vector<Int>>& cand,
                     const std::vector<std::size_t>& ord) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (rd.cartan(nodes[ord[i]], nodes[ord[j]]) != cand[i][j])
          return false;
    return true;
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (char l : letters) {
      std::vector<std::vector<Int>> cand;
      try {
        cand = cartan_matrix(l, static_cast<int>(r));
      } catch (const unknown_type&) {
        continue;
      }
      std::vector<std::size_t> ord(r);
      for (std::size_t i = 0; i < r; ++i) ord[i] = i;
      if (pass == 0) {
        if (matches(cand, ord)) return std::string(1, l) + std::to_string(r);
      } else {
        do {
          if (matches(cand, ord)) return std::string(1, l) + std::to_string(r);
        } while (std::next_permutation(ord.begin(), ord.end()));
      }
    }
  }
  throw unsupported_folding("unrecognized Cartan component");
}

inline std::string classify_type(const RootDatum& rd) {
  std::size_t m = rd.num_nodes();
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<std::size_t> q{i};
    comp[i] = ncomp;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      for (std::size_t b = 0; b < m; ++b)
        if (comp[b] < 0 && rd.cartan(a, b) != 0) {
          comp[b] = ncomp;
          q.push_back(b);
        }
    }
    ++ncomp;
  }
  std::string label;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < m; ++i)
      if (comp[i] == c) nodes.push_back(i);
    if (!label.empty()) label += "+";
    label += classify_component(rd, nodes);
  }
  std::size_t central = rd.rank;
  {
    IntMatrix span = IntMatrix::from_columns(rd.simple_roots);
    central = rd.rank - (rd.num_nodes() ? rank_q(span) : 0);
  }
  if (central > 0) {
    if (!label.empty()) label += "+";
    label += "GL1^" + std::to_string(central);
  }
  if (label.empty()) label = "trivial";
  return label;
}

}  // namespace detail

// The root-theoretic skeleton of the fixed dual group (H^vee)^I: a root datum
// for the identity component on X_*(T)_I/torsion, plus the component group.
struct EchelonData {
  RootDatum folded;                 // lives on the free quotient
  std::vector<Int> pi0;             // torsion of X_*(T)_I
  std::string folded_type;
  std::vector<Vec> class_torsion;   // torsion part of each coroot class
  WeylGroup relative_weyl;          // Weyl group of the folded datum
  bool torsion_lift_deterministic = true;
};

inline EchelonData fold_fixed_group(const RootDatum& rd,
                                    const PinnedAutomorphism& psi,
                                    const CoinvariantLattice& cl) {
  EchelonData ed;
  ed.pi0 = cl.quotient.torsion();
  std::size_t f = cl.quotient.free_rank();

  std::vector<Vec> simple_roots, simple_coroots;
  for (const auto& c : cl.coroot_classes) {
    if (is_zero(c.free_part))
      throw unsupported_folding("a simple-coroot class is pure torsion");
    simple_roots.push_back(c.free_part);
    ed.class_torsion.push_back(c.torsion_part);
  }

  auto lifts = detail::averaged_lift_basis(cl);
  auto form = [&](const Vec& x, const Vec& y) {
    std::vector<Rat> lx(rd.rank, Rat(0)), ly(rd.rank, Rat(0));
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t c = 0; c < rd.rank; ++c) {
        lx[c] += Rat(x[i]) * lifts[i][c];
        ly[c] += Rat(y[i]) * lifts[i][c];
      }
    return detail::root_sum_form(rd, lx, ly);
  };

  for (const auto& alpha : simple_roots) {
    Rat norm = form(alpha, alpha);
    if (norm == 0) throw unsupported_folding("isotropic folded root");
    Vec coroot(f);
    for (std::size_t i = 0; i < f; ++i) {
      Vec ei(f, Int(0));
      ei[i] = 1;
      Rat v = 2 * form(ei, alpha) / norm;
      v.canonicalize();
      if (v.get_den() != 1)
        throw unsupported_folding("folded coroot is not integral");
      coroot[i] = v.get_num();
    }
    simple_coroots.push_back(coroot);
  }

  ed.folded = make_root_datum(f, simple_roots, simple_coroots,
                              rd.name + "-folded");

  // cross-check: the folded root set must equal the reduced part of the image
  // of H's coroot set
  {
    std::set<Vec> image;
    for (const auto& bv : cl.datum.positive_coroots) {
      for (const Vec& s : {bv, vec_neg(bv)}) {
        Vec fp = cl.quotient.free_part(cl.quotient.normal_form(s));
        if (!is_zero(fp)) image.insert(fp);
      }
    }
    std::set<Vec> reduced;
    for (const auto& v : image) {
      bool halvable = true;
      Vec half(v.size());
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] % 2 != 0) halvable = false;
        else half[c] = v[c] / 2;
      }
      if (halvable && image.count(half)) continue;
      reduced.insert(v);
    }
    std::set<Vec> folded_roots;
    for (const auto& r : ed.folded.positive_roots) {
      folded_roots.insert(r);
      folded_roots.insert(vec_neg(r));
    }
    if (reduced != folded_roots)
      throw unsupported_folding(
          "folded root system does not match the coroot image set");
  }

  // the simple folded roots are independent iff torsion lifting of weights is
  // deterministic
  ed.torsion_lift_deterministic =
      simple_roots.empty() ||
      rank_q(IntMatrix::from_columns(simple_roots)) == simple_roots.size();

  ed.folded_type = detail::classify_type(ed.folded);
  if (psi.order == 1) ed.folded_type += " (dual)";
  ed.relative_weyl = weyl_group(ed.folded);
  return ed;
}

inline EchelonData fold_fixed_group(const RootDatum& rd,
                                    const PinnedAutomorphism& psi) {
  return fold_fixed_group(rd, psi, coweight_coinvariants(rd, psi));
}

}  // namespace satkit

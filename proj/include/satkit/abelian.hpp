#pragma once

#include "satkit/smith.hpp"

namespace satkit {

// Z^n / (column span of a relation matrix), presented in normal form.
// A normal form is (free coordinates ; torsion coordinates), the torsion
// coordinate i reduced to [0, d_i).
class FgAbelianGroup {
 public:
  FgAbelianGroup() : ambient_rank_(0) {}

  FgAbelianGroup(std::size_t ambient_rank, const IntMatrix& relations)
      : ambient_rank_(ambient_rank) {
    IntMatrix rel = relations;
    if (rel.rows() == 0) rel = IntMatrix(ambient_rank, 0);
    if (rel.rows() != ambient_rank)
      throw spec_error("relation matrix has wrong ambient rank");
    SmithDecomposition s = smith_normal_form(rel);
    u_ = s.u;
    std::size_t k = std::min(rel.rows(), rel.cols());
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      Int di = i < k ? s.d.at(i, i) : Int(0);
      if (di == 0)
        free_rows_.push_back(i);
      else if (di > 1) {
        torsion_rows_.push_back(i);
        torsion_.push_back(di);
      }
    }
    // Canonicalize signs: make the first nonzero entry of each coordinate
    // functional positive (negation is an automorphism of each cyclic factor).
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      for (std::size_t j = 0; j < ambient_rank; ++j) {
        if (u_.at(i, j) == 0) continue;
        if (u_.at(i, j) < 0)
          for (std::size_t l = 0; l < ambient_rank; ++l)
            u_.at(i, l) = -u_.at(i, l);
        break;
      }
    }
    // Order the free coordinates by the leading ambient column of their
    // functional, then lexicographically (a pure relabeling).
    auto leading = [&](std::size_t r) {
      for (std::size_t j = 0; j < ambient_rank; ++j)
        if (u_.at(r, j) != 0) return j;
      return ambient_rank;
    };
    std::sort(free_rows_.begin(), free_rows_.end(),
              [&](std::size_t a, std::size_t b) {
                std::size_t la = leading(a), lb = leading(b);
                if (la != lb) return la < lb;
                return u_.row(a) < u_.row(b);
              });
    u_inv_ = u_.inverse_unimodular();
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t free_rank() const { return free_rows_.size(); }
  const std::vector<Int>& torsion() const { return torsion_; }

  // Normal form of an ambient vector: free coordinates followed by reduced
  // torsion coordinates.
  Vec normal_form(const Vec& x) const {
    if (x.size() != ambient_rank_)
      throw spec_error("vector has wrong ambient rank");
    Vec y = u_.apply(x);
    Vec nf(free_rank() + torsion_.size());
    for (std::size_t i = 0; i < free_rows_.size(); ++i) nf[i] = y[free_rows_[i]];
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i) {
      Int t;
      mpz_fdiv_r(t.get_mpz_t(), y[torsion_rows_[i]].get_mpz_t(),
                 torsion_[i].get_mpz_t());
      nf[free_rank() + i] = t;
    }
    return nf;
  }

  // A distinguished ambient representative of a normal form.
  Vec lift(const Vec& nf) const {
    if (nf.size() != free_rank() + torsion_.size())
      throw spec_error("normal form has wrong length");
    Vec y(ambient_rank_, Int(0));
    for (std::size_t i = 0; i < free_rows_.size(); ++i) y[free_rows_[i]] = nf[i];
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i)
      y[torsion_rows_[i]] = nf[free_rank() + i];
    return u_inv_.apply(y);
  }

  Vec reduce(const Vec& nf) const { return normal_form(lift(nf)); }

  Vec nf_add(const Vec& a, const Vec& b) const { return reduce(vec_add(a, b)); }
  Vec nf_sub(const Vec& a, const Vec& b) const { return reduce(vec_sub(a, b)); }
  Vec nf_scale(const Int& c, const Vec& a) const {
    return reduce(vec_scale(c, a));
  }

  Vec zero_nf() const { return Vec(free_rank() + torsion_.size(), Int(0)); }

  Vec free_part(const Vec& nf) const {
    return Vec(nf.begin(), nf.begin() + free_rank());
  }
  Vec torsion_part(const Vec& nf) const {
    return Vec(nf.begin() + free_rank(), nf.end());
  }

  // Rows = normal-form coordinates as functionals on the ambient lattice.
  IntMatrix projection() const {
    IntMatrix p(free_rank() + torsion_.size(), ambient_rank_);
    for (std::size_t i = 0; i < free_rows_.size(); ++i)
      for (std::size_t j = 0; j < ambient_rank_; ++j)
        p.at(i, j) = u_.at(free_rows_[i], j);
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i)
      for (std::size_t j = 0; j < ambient_rank_; ++j)
        p.at(free_rank() + i, j) = u_.at(torsion_rows_[i], j);
    return p;
  }

 private:
  std::size_t ambient_rank_;
  IntMatrix u_, u_inv_;
  std::vector<std::size_t> free_rows_;
  std::vector<std::size_t> torsion_rows_;
  std::vector<Int> torsion_;
};

inline int matrix_order(const IntMatrix& g, int cap = 48) {
  IntMatrix p = g;
  for (int e = 1; e <= cap; ++e) {
    if (p.is_identity()) return e;
    p = p * g;
  }
  throw not_finite_order("matrix has no finite order up to the cap");
}

// Z^n / image(1 - gamma) for gamma of finite order.
inline FgAbelianGroup coinvariants(std::size_t rank, const IntMatrix& gamma) {
  if (gamma.rows() != rank || gamma.cols() != rank)
    throw spec_error("gamma has wrong size");
  matrix_order(gamma);
  IntMatrix rel = IntMatrix::identity(rank) - gamma;
  return FgAbelianGroup(rank, rel);
}

// Saturated kernel of (1 - gamma): a basis of the fixed sublattice.
inline std::vector<Vec> invariants(std::size_t rank, const IntMatrix& gamma) {
  if (gamma.rows() != rank || gamma.cols() != rank)
    throw spec_error("gamma has wrong size");
  matrix_order(gamma);
  IntMatrix a = IntMatrix::identity(rank) - gamma;
  SmithDecomposition s = smith_normal_form(a);
  std::size_t k = std::min(a.rows(), a.cols());
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < rank; ++j) {
    Int dj = j < k ? s.d.at(j, j) : Int(0);
    if (dj == 0) basis.push_back(s.v.column(j));
  }
  return basis;
}

}  // namespace satkit

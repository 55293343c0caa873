#pragma once

#include "satkit/int_matrix.hpp"

namespace satkit {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_k,
// all diagonal entries nonnegative.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < r; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < c; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  // row[a] -= q * row[b]
  auto row_sub = [&](std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < c; ++j) d.at(a, j) -= q * d.at(b, j);
    for (std::size_t j = 0; j < r; ++j) u.at(a, j) -= q * u.at(b, j);
  };
  // col[a] -= q * col[b]
  auto col_sub = [&](std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < r; ++i) d.at(i, a) -= q * d.at(i, b);
    for (std::size_t i = 0; i < c; ++i) v.at(i, a) -= q * v.at(i, b);
  };
  auto negate_row = [&](std::size_t a) {
    for (std::size_t j = 0; j < c; ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < r; ++j) u.at(a, j) = -u.at(a, j);
  };

  std::size_t k = std::min(r, c);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Bring the nonzero entry of smallest absolute value in the trailing
      // block to position (t, t).
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int& x = d.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (best == 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) {
        t = k;  // trailing block is zero, done
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        row_sub(i, t, q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        col_sub(j, t, q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull in any entry not divisible by
      // the pivot and restart this stage.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_sub(t, i, Int(-1));
            divides = false;
          }
      if (divides) break;
    }
    if (t >= k) break;
  }

  for (std::size_t t = 0; t < k; ++t)
    if (d.at(t, t) < 0) negate_row(t);

  return {d, u, v};
}

}  // namespace satkit

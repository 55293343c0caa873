#pragma once

#include "satkit/qpoly.hpp"
#include "satkit/int_matrix.hpp"

namespace satkit {

// An explicit representation with a principal nilpotent: basis vectors carry
// weights in Z^rank, X is the sum of simple root vectors. When sub_span is
// nonempty the model is the submodule it spans (spanning vectors must be
// weight-homogeneous).
struct MatrixModel {
  std::string name;
  std::size_t rank = 0;                   // rank of the weight lattice
  std::vector<Vec> weights;               // per ambient basis vector
  std::vector<std::vector<Rat>> x;        // the nilpotent, ambient matrix
  std::vector<std::vector<Rat>> sub_span; // optional submodule spanning set
};

namespace detail {

inline std::size_t rational_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  std::size_t r = a.size(), c = a[0].size(), rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t p = rank;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < c; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rat>> mat_mul(
    const std::vector<std::vector<Rat>>& a,
    const std::vector<std::vector<Rat>>& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

inline void check_weight_raising(const MatrixModel& m) {
  // sanity: X maps each weight vector into strictly higher weight spaces
  for (std::size_t j = 0; j < m.weights.size(); ++j)
    for (std::size_t i = 0; i < m.weights.size(); ++i)
      if (m.x[i][j] != 0 && m.weights[i] == m.weights[j])
        throw computation_error("nilpotent does not raise weights in " +
                                m.name);
}

}  // namespace detail

// GL_n standard: X = sum of E_{i,i+1}, weight of e_i is e_i.
inline MatrixModel model_gl_standard(int n) {
  MatrixModel m;
  m.name = "gl" + std::to_string(n) + "_std";
  m.rank = n;
  m.x.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i + 1 < n; ++i) m.x[i][i + 1] = 1;
  for (int i = 0; i < n; ++i) {
    Vec w(n, Int(0));
    w[i] = 1;
    m.weights.push_back(w);
  }
  detail::check_weight_raising(m);
  return m;
}

// Wedge power of the GL_n standard model.
inline MatrixModel model_gl_wedge(int n, int s) {
  if (s < 1 || s > n) throw unsupported_model("bad wedge power");
  MatrixModel m;
  m.name = "gl" + std::to_string(n) + "_wedge" + std::to_string(s);
  m.rank = n;
  std::vector<std::vector<int>> basis;  // increasing index tuples
  std::vector<int> cur(s);
  std::function<void(int, int)> gen = [&](int pos, int start) {
    if (pos == s) {
      basis.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur[pos] = i;
      gen(pos + 1, i + 1);
    }
  };
  gen(0, 0);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    index[basis[b]] = b;
    Vec w(n, Int(0));
    for (int i : basis[b]) w[i] = 1;
    m.weights.push_back(w);
  }
  m.x.assign(basis.size(), std::vector<Rat>(basis.size(), Rat(0)));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (int pos = 0; pos < s; ++pos) {
      int i = basis[b][pos];
      if (i == 0) continue;
      // X e_i = e_{i-1}; reorder and drop repeats
      std::vector<int> img = basis[b];
      img[pos] = i - 1;
      std::sort(img.begin(), img.end());
      bool repeat = false;
      for (int t = 0; t + 1 < s; ++t)
        if (img[t] == img[t + 1]) repeat = true;
      if (repeat) continue;
      // sign of the sort permutation: moving i-1 left past smaller entries;
      // one swap chain, sign = (-1)^{number of transpositions}
      int from = pos, to = 0;
      while (img[to] != i - 1) ++to;
      int sign = (from - to) % 2 == 0 ? 1 : -1;
      m.x[index[img]][b] += sign;
    }
  detail::check_weight_raising(m);
  return m;
}

// Symmetric power of the GL_n standard model (derivation action).
inline MatrixModel model_gl_sym(int n, int k) {
  if (k < 1) throw unsupported_model("bad symmetric power");
  MatrixModel m;
  m.name = "gl" + std::to_string(n) + "_sym" + std::to_string(k);
  m.rank = n;
  std::vector<std::vector<int>> basis;  // exponent vectors summing to k
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> gen = [&](int pos, int left) {
    if (pos + 1 == n) {
      cur[pos] = left;
      basis.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[pos] = a;
      gen(pos + 1, left - a);
    }
  };
  gen(0, k);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    index[basis[b]] = b;
    Vec w(n, Int(0));
    for (int i = 0; i < n; ++i) w[i] = basis[b][i];
    m.weights.push_back(w);
  }
  m.x.assign(basis.size(), std::vector<Rat>(basis.size(), Rat(0)));
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (int i = 0; i + 1 < n; ++i) {
      if (basis[b][i + 1] == 0) continue;
      std::vector<int> img = basis[b];
      img[i + 1] -= 1;
      img[i] += 1;
      m.x[index[img]][b] += basis[b][i + 1];
    }
  detail::check_weight_raising(m);
  return m;
}

// Adjoint representation of SL_n, weights in e-class coordinates (rank n-1).
inline MatrixModel model_sl_adjoint(int n) {
  MatrixModel m;
  m.name = "sl" + std::to_string(n) + "_adjoint";
  m.rank = n - 1;
  // basis: E_{ij} (i != j), then H_i = E_ii - E_{i+1,i+1}
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.push_back({i, j});
  std::size_t dim = offdiag.size() + (n - 1);
  auto class_coords = [&](int i) {  // e_i in e-class coordinates
    Vec w(n - 1, Int(0));
    if (i < n - 1)
      w[i] = 1;
    else
      for (int t = 0; t < n - 1; ++t) w[t] = -1;
    return w;
  };
  for (const auto& [i, j] : offdiag)
    m.weights.push_back(vec_sub(class_coords(i), class_coords(j)));
  for (int i = 0; i + 1 < n; ++i) m.weights.push_back(Vec(n - 1, Int(0)));

  // expand ad_X(B) = XB - BX in the basis
  auto expand = [&](const std::vector<std::vector<Rat>>& b) {
    std::vector<Rat> coords(dim, Rat(0));
    // off-diagonal coordinates are direct entries
    for (std::size_t t = 0; t < offdiag.size(); ++t)
      coords[t] = b[offdiag[t].first][offdiag[t].second];
    // diagonal part d expands as sum c_i H_i with c_i = d_1 + ... + d_i
    Rat acc(0);
    for (int i = 0; i + 1 < n; ++i) {
      acc += b[i][i];
      coords[offdiag.size() + i] = acc;
    }
    return coords;
  };
  auto basis_matrix = [&](std::size_t t) {
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n, Rat(0)));
    if (t < offdiag.size()) {
      b[offdiag[t].first][offdiag[t].second] = 1;
    } else {
      int i = static_cast<int>(t - offdiag.size());
      b[i][i] = 1;
      b[i + 1][i + 1] = -1;
    }
    return b;
  };
  std::vector<std::vector<Rat>> xmat(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i + 1 < n; ++i) xmat[i][i + 1] = 1;
  m.x.assign(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t t = 0; t < dim; ++t) {
    auto b = basis_matrix(t);
    auto ad = detail::mat_mul(xmat, b);
    auto bx = detail::mat_mul(b, xmat);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ad[i][j] -= bx[i][j];
    auto coords = expand(ad);
    for (std::size_t s = 0; s < dim; ++s) m.x[s][t] = coords[s];
  }
  detail::check_weight_raising(m);
  return m;
}

// SO_{2m+1} standard representation, split form for the antidiagonal form.
inline MatrixModel model_so_odd_standard(int rank) {
  int m = rank, big = 2 * m + 1;
  MatrixModel mm;
  mm.name = "so" + std::to_string(big) + "_std";
  mm.rank = m;
  mm.x.assign(big, std::vector<Rat>(big, Rat(0)));
  auto add_vec = [&](int a, int b) {
    // E_{ab} - E_{N+1-b, N+1-a} in 1-based indices
    mm.x[a - 1][b - 1] += 1;
    mm.x[big - b][big - a] -= 1;
  };
  for (int i = 1; i <= m; ++i) add_vec(i, i + 1);
  for (int j = 0; j < big; ++j) {
    Vec w(m, Int(0));
    if (j < m)
      w[j] = 1;
    else if (j > m)
      w[2 * m - j] = -1;
    mm.weights.push_back(w);
  }
  // membership check: x^T J + J x = 0 for the antidiagonal form
  for (int i = 0; i < big; ++i)
    for (int j = 0; j < big; ++j)
      if (mm.x[j][i] + mm.x[big - 1 - i][big - 1 - j] != 0)
        throw computation_error("so model is not in the Lie algebra");
  detail::check_weight_raising(mm);
  return mm;
}

namespace detail {

inline std::vector<std::vector<Rat>> sp_nilpotent(int m) {
  int big = 2 * m;
  std::vector<std::vector<Rat>> x(big, std::vector<Rat>(big, Rat(0)));
  for (int i = 1; i < m; ++i) {
    x[i - 1][i] += 1;
    x[big - i - 1][big - i] -= 1;
  }
  x[m - 1][m] += 1;
  // membership: x^T O + O x = 0 with O the antidiagonal symplectic form
  auto omega = [&](int i, int j) -> int {  // 0-based
    if (i + j != big - 1) return 0;
    return i < m ? 1 : -1;
  };
  for (int i = 0; i < big; ++i)
    for (int j = 0; j < big; ++j) {
      Rat s(0);
      for (int k = 0; k < big; ++k)
        s += x[k][i] * omega(k, j) + omega(i, k) * x[k][j];
      if (s != 0) throw computation_error("sp model is not in the Lie algebra");
    }
  return x;
}

inline Vec sp_weight(int m, int j) {  // 0-based basis index
  Vec w(m, Int(0));
  if (j < m)
    w[j] = 1;
  else
    w[2 * m - 1 - j] = -1;
  return w;
}

}  // namespace detail

// Sp_{2m} standard representation.
inline MatrixModel model_sp_standard(int m) {
  MatrixModel mm;
  mm.name = "sp" + std::to_string(2 * m) + "_std";
  mm.rank = m;
  mm.x = detail::sp_nilpotent(m);
  for (int j = 0; j < 2 * m; ++j) mm.weights.push_back(detail::sp_weight(m, j));
  detail::check_weight_raising(mm);
  return mm;
}

// Primitive part of the wedge square of the Sp_{2m} standard representation
// (the kernel of the symplectic contraction), dimension 2m^2 - m - 1.
inline MatrixModel model_sp_wedge2_primitive(int m) {
  int big = 2 * m;
  MatrixModel mm;
  mm.name = "sp" + std::to_string(big) + "_wedge2prim";
  mm.rank = m;
  auto x1 = detail::sp_nilpotent(m);
  // ambient basis: e_i ^ e_j, i < j
  std::vector<std::pair<int, int>> basis;
  std::map<std::pair<int, int>, std::size_t> index;
  for (int i = 0; i < big; ++i)
    for (int j = i + 1; j < big; ++j) {
      index[{i, j}] = basis.size();
      basis.push_back({i, j});
    }
  for (const auto& [i, j] : basis)
    mm.weights.push_back(
        vec_add(detail::sp_weight(m, i), detail::sp_weight(m, j)));
  mm.x.assign(basis.size(), std::vector<Rat>(basis.size(), Rat(0)));
  auto add_wedge = [&](int a, int b, const Rat& c, std::size_t col) {
    if (a == b) return;
    if (a < b)
      mm.x[index[{a, b}]][col] += c;
    else
      mm.x[index[{b, a}]][col] -= c;
  };
  for (std::size_t t = 0; t < basis.size(); ++t) {
    auto [i, j] = basis[t];
    for (int a = 0; a < big; ++a) {
      if (x1[a][i] != 0) add_wedge(a, j, x1[a][i], t);
      if (x1[a][j] != 0) add_wedge(i, a, x1[a][j], t);
    }
  }
  // primitive part: non-pair wedges plus differences of consecutive pair
  // vectors u_k = e_k ^ e_{2m-1-k} (all weight zero)
  for (std::size_t t = 0; t < basis.size(); ++t) {
    auto [i, j] = basis[t];
    if (i + j == big - 1) continue;
    std::vector<Rat> v(basis.size(), Rat(0));
    v[t] = 1;
    mm.sub_span.push_back(v);
  }
  for (int k = 0; k + 1 < m; ++k) {
    std::vector<Rat> v(basis.size(), Rat(0));
    v[index[{k, big - 1 - k}]] = 1;
    v[index[{k + 1, big - 2 - k}]] = -1;
    mm.sub_span.push_back(v);
  }
  detail::check_weight_raising(mm);
  return mm;
}

// Brylinski-Kostant filtration polynomial: sum_i dim gr_i^F V(mu) q^i where
// F_i = ker X^{i+1}.
inline QPolynomial bk_filtration_oracle(const MatrixModel& m, const Vec& mu) {
  if (mu.size() != m.rank) throw unsupported_model("weight has wrong rank");
  std::size_t ambient = m.weights.size();
  // columns spanning the mu weight space of the model
  std::vector<std::vector<Rat>> cols;
  if (m.sub_span.empty()) {
    for (std::size_t j = 0; j < ambient; ++j)
      if (m.weights[j] == mu) {
        std::vector<Rat> c(ambient, Rat(0));
        c[j] = 1;
        cols.push_back(c);
      }
  } else {
    for (const auto& v : m.sub_span) {
      Vec w;
      bool homogeneous = true, any = false;
      for (std::size_t j = 0; j < ambient; ++j)
        if (v[j] != 0) {
          if (!any) {
            w = m.weights[j];
            any = true;
          } else if (m.weights[j] != w) {
            homogeneous = false;
          }
        }
      if (!homogeneous)
        throw unsupported_model("submodule spanning set is not homogeneous");
      if (any && w == mu) cols.push_back(v);
    }
  }
  if (cols.empty()) return QPolynomial();
  // matrix with the weight vectors as columns
  std::vector<std::vector<Rat>> b(ambient, std::vector<Rat>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) b[i][j] = cols[j][i];
  std::size_t dim_mu = detail::rational_rank(b);

  QPolynomial out;
  std::size_t prev = 0;  // dim F_{i-1}
  auto cur = b;
  for (long i = 0;; ++i) {
    cur = detail::mat_mul(m.x, cur);  // X^{i+1} applied to the columns
    std::size_t r = detail::rational_rank(cur);
    std::size_t dim_fi = dim_mu - r;
    if (dim_fi > prev)
      out += QPolynomial::q_power(i, Rat(static_cast<long>(dim_fi - prev)));
    prev = dim_fi;
    if (r == 0) break;
  }
  return out;
}

}  // namespace satkit

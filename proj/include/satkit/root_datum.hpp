#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "satkit/int_matrix.hpp"

namespace satkit {

// Family tag per product factor, used when constructing pinned automorphisms.
enum class Family { GL, GL1, SL, SimplyConnected, Adjoint, Folded };

struct RootDatumFactor {
  Family family;
  char series = 0;   // 'A'..'G' for simple types, 0 otherwise
  int series_rank = 0;
  std::size_t coord_begin = 0, coord_count = 0;  // slice of the lattice
  std::size_t node_begin = 0, node_count = 0;    // slice of the simple nodes
};

// A root datum in coordinates where both the character and cocharacter
// lattices are Z^rank and the pairing is the standard dot product.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<Vec> positive_roots;
  std::vector<Vec> positive_coroots;  // parallel to positive_roots
  Vec two_rho;                        // sum of positive roots
  std::vector<RootDatumFactor> factors;
  std::string name;

  std::size_t num_nodes() const { return simple_roots.size(); }

  Int pair_coroot(const Vec& x, std::size_t i) const {
    return dot(x, simple_coroots[i]);
  }

  // s_i on the character lattice
  Vec reflect(std::size_t i, const Vec& x) const {
    return vec_sub(x, vec_scale(pair_coroot(x, i), simple_roots[i]));
  }

  // s_i on the cocharacter lattice
  Vec coreflect(std::size_t i, const Vec& v) const {
    return vec_sub(v, vec_scale(dot(simple_roots[i], v), simple_coroots[i]));
  }

  bool is_dominant_weight(const Vec& x) const {
    for (std::size_t i = 0; i < num_nodes(); ++i)
      if (pair_coroot(x, i) < 0) return false;
    return true;
  }

  Vec dominant_representative(Vec x) const {
    for (;;) {
      bool moved = false;
      for (std::size_t i = 0; i < num_nodes(); ++i)
        if (pair_coroot(x, i) < 0) {
          x = reflect(i, x);
          moved = true;
        }
      if (!moved) return x;
    }
  }

  Vec antidominant_representative(Vec x) const {
    for (;;) {
      bool moved = false;
      for (std::size_t i = 0; i < num_nodes(); ++i)
        if (pair_coroot(x, i) > 0) {
          x = reflect(i, x);
          moved = true;
        }
      if (!moved) return x;
    }
  }

  // Cartan matrix entry <alpha_j, alpha_i^vee>
  Int cartan(std::size_t i, std::size_t j) const {
    return dot(simple_roots[j], simple_coroots[i]);
  }

  // The dual datum: characters and cocharacters swapped.
  RootDatum dual() const {
    RootDatum d;
    d.rank = rank;
    d.simple_roots = simple_coroots;
    d.simple_coroots = simple_roots;
    d.positive_roots = positive_coroots;
    d.positive_coroots = positive_roots;
    d.two_rho = Vec(rank, Int(0));
    for (const auto& r : d.positive_roots) d.two_rho = vec_add(d.two_rho, r);
    d.factors = factors;
    d.name = name + "^";
    return d;
  }
};

namespace detail {

// Closure of the simple root/coroot pairs under simple reflections; returns
// positive roots only, paired with their coroots.
inline void generate_roots(RootDatum& rd) {
  std::size_t m = rd.num_nodes();
  std::map<Vec, std::pair<Vec, std::vector<Int>>> seen;  // root -> (coroot, simple-coeffs)
  std::deque<Vec> queue;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> c(m, Int(0));
    c[i] = 1;
    seen[rd.simple_roots[i]] = {rd.simple_coroots[i], c};
    queue.push_back(rd.simple_roots[i]);
  }
  while (!queue.empty()) {
    Vec beta = queue.front();
    queue.pop_front();
    auto entry = seen[beta];
    for (std::size_t i = 0; i < m; ++i) {
      Int p = rd.pair_coroot(beta, i);
      Vec nb = vec_sub(beta, vec_scale(p, rd.simple_roots[i]));
      if (seen.count(nb)) continue;
      Vec nc = vec_sub(entry.first,
                       vec_scale(dot(rd.simple_roots[i], entry.first),
                                 rd.simple_coroots[i]));
      std::vector<Int> coeffs = entry.second;
      coeffs[i] -= p;
      seen[nb] = {nc, coeffs};
      queue.push_back(nb);
      if (seen.size() > 100000)
        throw computation_error("root system closure did not terminate");
    }
  }
  rd.positive_roots.clear();
  rd.positive_coroots.clear();
  for (const auto& [beta, entry] : seen) {
    bool pos = true;
    for (const auto& c : entry.second)
      if (c < 0) {
        pos = false;
        break;
      }
    if (!pos) continue;
    rd.positive_roots.push_back(beta);
    rd.positive_coroots.push_back(entry.first);
  }
  rd.two_rho = Vec(rd.rank, Int(0));
  for (const auto& r : rd.positive_roots) rd.two_rho = vec_add(rd.two_rho, r);
}

// Cartan matrix of a simple type, Bourbaki numbering. c[i][j] = <a_j, a_i^vee>.
inline std::vector<std::vector<Int>> cartan_matrix(char series, int r) {
  auto bad = [&]() -> std::vector<std::vector<Int>> {
    throw unknown_type(std::string("unsupported type ") + series +
                       std::to_string(r));
  };
  if (r < 1) return bad();
  std::vector<std::vector<Int>> c(r, std::vector<Int>(r, Int(0)));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':  // so(2r+1), alpha_r short
      if (r < 2) return bad();
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 1][r - 2] = -2;
      break;
    case 'C':  // sp(2r), alpha_r long
      if (r < 2) return bad();
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -2;
      break;
    case 'D':
      if (r < 3) return bad();
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E': {
      if (r < 6 || r > 8) return bad();
      // Bourbaki: node 2 hangs off node 4 (1-indexed 1-3-4-5-6..., 2-4)
      link(0, 2);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      link(1, 3);
      break;
    }
    case 'F':
      if (r != 4) return bad();
      link(0, 1);
      link(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      if (r != 2) return bad();
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      return bad();
  }
  return c;
}

struct FactorSpec {
  Family family;
  char series;
  int r;
};

inline FactorSpec parse_factor(const std::string& tok) {
  auto num = [&](std::size_t pos, std::size_t end) {
    if (pos >= end) throw unknown_type("missing rank in '" + tok + "'");
    for (std::size_t i = pos; i < end; ++i)
      if (!isdigit(tok[i])) throw unknown_type("bad rank in '" + tok + "'");
    return std::stoi(tok.substr(pos, end - pos));
  };
  if (tok.rfind("GL", 0) == 0) {
    int n = num(2, tok.size());
    if (n < 1 || n > 64) throw rank_too_large("GL rank out of range");
    return {n == 1 ? Family::GL1 : Family::GL, 'A', n};
  }
  if (tok.rfind("SL", 0) == 0) {
    int n = num(2, tok.size());
    if (n < 2 || n > 64) throw rank_too_large("SL rank out of range");
    return {Family::SL, 'A', n};
  }
  if (!tok.empty() && tok[0] >= 'A' && tok[0] <= 'G') {
    bool adjoint = tok.size() > 2 && tok.substr(tok.size() - 2) == "ad";
    std::size_t end = adjoint ? tok.size() - 2 : tok.size();
    int r = num(1, end);
    if (r > 8) throw rank_too_large("simple type rank exceeds 8");
    return {adjoint ? Family::Adjoint : Family::SimplyConnected, tok[0], r};
  }
  throw unknown_type("unrecognized factor '" + tok + "'");
}

inline void append_factor(RootDatum& rd, const FactorSpec& fs) {
  RootDatumFactor f;
  f.family = fs.family;
  f.series = fs.series;
  f.series_rank = fs.r;
  f.coord_begin = rd.rank;
  f.node_begin = rd.num_nodes();
  std::size_t base = rd.rank;
  auto grow = [&](std::size_t extra) {
    rd.rank += extra;
    for (auto& v : rd.simple_roots) v.resize(rd.rank, Int(0));
    for (auto& v : rd.simple_coroots) v.resize(rd.rank, Int(0));
  };
  auto unit = [&](std::size_t i) {
    Vec v(rd.rank, Int(0));
    v[i] = 1;
    return v;
  };
  switch (fs.family) {
    case Family::GL1:
      grow(1);
      f.coord_count = 1;
      f.node_count = 0;
      break;
    case Family::GL: {
      int n = fs.r;
      grow(n);
      f.coord_count = n;
      f.node_count = n - 1;
      for (int i = 0; i + 1 < n; ++i) {
        Vec a = vec_sub(unit(base + i), unit(base + i + 1));
        rd.simple_roots.push_back(a);
        rd.simple_coroots.push_back(a);
      }
      break;
    }
    case Family::SL: {
      // X^* = Z^n / Z(1,..,1) with basis the classes of e_1..e_{n-1};
      // the class of e_n is -(f_1+..+f_{n-1}).
      int n = fs.r;
      grow(n - 1);
      f.coord_count = n - 1;
      f.node_count = n - 1;
      for (int i = 0; i + 1 < n; ++i) {
        Vec a(rd.rank, Int(0)), av(rd.rank, Int(0));
        if (i + 2 < n) {
          a[base + i] = 1;
          a[base + i + 1] = -1;
          av[base + i] = 1;
          av[base + i + 1] = -1;
        } else {
          for (int j = 0; j + 1 < n; ++j) a[base + j] = 1;
          a[base + n - 2] = 2;
          av[base + n - 2] = 1;
        }
        rd.simple_roots.push_back(a);
        rd.simple_coroots.push_back(av);
      }
      break;
    }
    case Family::SimplyConnected:
    case Family::Adjoint: {
      auto c = cartan_matrix(fs.series, fs.r);
      int r = fs.r;
      grow(r);
      f.coord_count = r;
      f.node_count = r;
      for (int j = 0; j < r; ++j) {
        Vec a(rd.rank, Int(0)), av(rd.rank, Int(0));
        if (fs.family == Family::SimplyConnected) {
          // coroots are the basis, root j is column j of the Cartan matrix
          for (int i = 0; i < r; ++i) a[base + i] = c[i][j];
          av[base + j] = 1;
        } else {
          // roots are the basis, coroot j is row j of the Cartan matrix
          a[base + j] = 1;
          for (int i = 0; i < r; ++i) av[base + i] = c[j][i];
        }
        rd.simple_roots.push_back(a);
        rd.simple_coroots.push_back(av);
      }
      break;
    }
    case Family::Folded:
      throw unknown_type("folded data cannot be named directly");
  }
  rd.factors.push_back(f);
}

}  // namespace detail

inline RootDatum build_root_datum(const std::string& name) {
  RootDatum rd;
  rd.name = name;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t next = name.find('x', pos);
    std::string tok =
        name.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw unknown_type("empty factor in '" + name + "'");
    detail::append_factor(rd, detail::parse_factor(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  detail::generate_roots(rd);
  // Cartan validation: pairings of simple roots with simple coroots form a
  // generalized Cartan matrix.
  for (std::size_t i = 0; i < rd.num_nodes(); ++i)
    for (std::size_t j = 0; j < rd.num_nodes(); ++j) {
      Int c = rd.cartan(i, j);
      if (i == j ? c != 2 : c > 0)
        throw computation_error("Cartan matrix check failed");
    }
  return rd;
}

// Build a root datum directly from simple root/coroot pairs (used for folded
// data).
inline RootDatum make_root_datum(std::size_t rank,
                                 const std::vector<Vec>& simple_roots,
                                 const std::vector<Vec>& simple_coroots,
                                 const std::string& name) {
  RootDatum rd;
  rd.rank = rank;
  rd.simple_roots = simple_roots;
  rd.simple_coroots = simple_coroots;
  RootDatumFactor f;
  f.family = Family::Folded;
  f.coord_count = rank;
  f.node_count = simple_roots.size();
  rd.factors.push_back(f);
  rd.name = name;
  for (std::size_t i = 0; i < rd.num_nodes(); ++i)
    for (std::size_t j = 0; j < rd.num_nodes(); ++j) {
      Int c = rd.cartan(i, j);
      if (i == j ? c != 2 : c > 0)
        throw computation_error("Cartan matrix check failed");
    }
  detail::generate_roots(rd);
  return rd;
}

struct WeylGroup {
  std::vector<IntMatrix> elements;  // acting on the character lattice
  std::vector<int> lengths;
  std::vector<IntMatrix> simple_reflections;

  std::size_t order() const { return elements.size(); }
};

inline WeylGroup weyl_group(const RootDatum& rd, std::size_t cap = 1000000) {
  std::size_t n = rd.rank, m = rd.num_nodes();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < m; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        s.at(a, b) -= rd.simple_roots[i][a] * rd.simple_coroots[i][b];
    gens.push_back(s);
  }
  WeylGroup w;
  w.simple_reflections = gens;
  std::map<IntMatrix, int> seen;
  std::deque<IntMatrix> queue;
  IntMatrix id = IntMatrix::identity(n);
  seen[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    IntMatrix g = queue.front();
    queue.pop_front();
    int len = seen[g];
    for (const auto& s : gens) {
      IntMatrix h = s * g;
      if (seen.count(h)) continue;
      if (seen.size() >= cap)
        throw group_too_large("Weyl group exceeds the configured cap");
      seen[h] = len + 1;
      queue.push_back(h);
    }
  }
  for (const auto& [g, len] : seen) {
    w.elements.push_back(g);
    w.lengths.push_back(len);
  }
  return w;
}

using WeightMultiset = std::map<Vec, Int>;

namespace detail {

// Expansion of x (assumed in the root lattice span) in the simple roots.
inline std::vector<Rat> simple_root_coordinates(const RootDatum& rd,
                                                const Vec& x,
                                                bool* in_span = nullptr) {
  std::size_t m = rd.num_nodes();
  // Solve C t = p where C is the Cartan matrix (rows indexed by coroots).
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = Rat(rd.cartan(i, j));
    a[i][m] = Rat(dot(x, rd.simple_coroots[i]));
  }
  std::vector<Rat> t(m, Rat(0));
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[row][col];
      for (std::size_t j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    t[pivot_col[i]] = a[i][m] / a[i][pivot_col[i]];
  // verify (the Cartan matrix can be singular for non-semisimple data, so
  // the system may be inconsistent when x is outside the root span)
  bool ok = true;
  {
    std::vector<Rat> acc(rd.rank, Rat(0));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < rd.rank; ++c)
        acc[c] += t[j] * Rat(rd.simple_roots[j][c]);
    for (std::size_t c = 0; c < rd.rank; ++c)
      if (acc[c] != Rat(x[c])) ok = false;
  }
  if (in_span)
    *in_span = ok;
  else if (!ok)
    throw computation_error("vector is not in the span of the simple roots");
  return t;
}

struct FreudenthalContext {
  const RootDatum& rd;
  // B(x, y) = sum over positive coroots of <x, b><y, b>, a W-invariant form.
  Int form(const Vec& x, const Vec& y) const {
    Int s = 0;
    for (const auto& b : rd.positive_coroots) s += dot(x, b) * dot(y, b);
    return s;
  }
  // B(2x + 2rho, 2x + 2rho)
  Int norm_shifted(const Vec& x) const {
    Vec v = vec_add(vec_scale(2, x), rd.two_rho);
    return form(v, v);
  }
};

}  // namespace detail

// Multiplicities of the dominant weights of V_lambda (Freudenthal).
inline WeightMultiset dominant_weight_multiplicities(const RootDatum& rd,
                                                     const Vec& lambda) {
  if (!rd.is_dominant_weight(lambda)) throw not_dominant("weight not dominant");
  detail::FreudenthalContext ctx{rd};
  std::size_t m = rd.num_nodes();

  Vec low = rd.antidominant_representative(lambda);
  std::vector<Int> bound(m);
  {
    auto t = detail::simple_root_coordinates(rd, vec_sub(lambda, low));
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i].get_den() != 1 || t[i] < 0)
        throw computation_error("bad dominant-cone bounds");
      bound[i] = t[i].get_num();
    }
  }

  // Enumerate candidates lambda - sum k_i alpha_i within the box, keeping the
  // dominant ones, ordered by height.
  std::map<Int, std::vector<Vec>> by_height;
  Vec cur = lambda;
  std::vector<Int> k(m, Int(0));
  Int height = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      if (rd.is_dominant_weight(cur)) by_height[height].push_back(cur);
      return;
    }
    for (k[i] = 0; k[i] <= bound[i]; ++k[i]) {
      rec(i + 1);
      cur = vec_sub(cur, rd.simple_roots[i]);
      height += 1;
    }
    cur = vec_add(cur, vec_scale(bound[i] + 1, rd.simple_roots[i]));
    height -= bound[i] + 1;
    k[i] = 0;
  };
  rec(0);

  Int top_norm = ctx.norm_shifted(lambda);
  WeightMultiset mult;
  mult[lambda] = 1;
  for (auto& [h, weights] : by_height) {
    std::sort(weights.begin(), weights.end());
    for (const auto& mu : weights) {
      if (mu == lambda) continue;
      Int mu_norm = ctx.norm_shifted(mu);
      Int den = top_norm - mu_norm;
      if (den == 0) continue;  // not a weight of V_lambda
      Int num = 0;
      for (std::size_t a = 0; a < rd.positive_roots.size(); ++a) {
        const Vec& alpha = rd.positive_roots[a];
        Vec two_alpha = vec_scale(2, alpha);
        Vec v = vec_scale(2, mu);
        for (Int kk = 1;; ++kk) {
          v = vec_add(v, two_alpha);
          // v = 2(mu + k alpha)
          Vec shifted = vec_add(v, rd.two_rho);
          if (ctx.form(shifted, shifted) > top_norm) break;
          Vec w(rd.rank);
          for (std::size_t c = 0; c < rd.rank; ++c) w[c] = v[c] / 2;
          Vec rep = rd.dominant_representative(w);
          auto it = mult.find(rep);
          if (it != mult.end()) num += it->second * ctx.form(v, two_alpha);
        }
      }
      if (num == 0) continue;
      Rat val(2 * num, den);
      val.canonicalize();
      if (val.get_den() != 1)
        throw computation_error("Freudenthal recursion produced a fraction");
      if (val.get_num() > 0) mult[mu] = val.get_num();
    }
  }
  return mult;
}

// Full weight multiset of V_lambda: dominant multiplicities spread over Weyl
// orbits.
inline WeightMultiset weyl_character(const RootDatum& rd, const Vec& lambda,
                                     std::size_t cap = 2000000) {
  WeightMultiset dom = dominant_weight_multiplicities(rd, lambda);
  WeightMultiset full;
  for (const auto& [mu, c] : dom) {
    std::set<Vec> orbit;
    std::deque<Vec> queue;
    orbit.insert(mu);
    queue.push_back(mu);
    while (!queue.empty()) {
      Vec x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < rd.num_nodes(); ++i) {
        Vec y = rd.reflect(i, x);
        if (orbit.insert(y).second) {
          if (full.size() + orbit.size() > cap)
            throw group_too_large("weight multiset exceeds cap");
          queue.push_back(y);
        }
      }
    }
    for (const auto& x : orbit) full[x] += c;
  }
  return full;
}

inline Int weight_multiplicity(const RootDatum& rd, const Vec& lambda,
                               const Vec& mu) {
  WeightMultiset dom = dominant_weight_multiplicities(rd, lambda);
  auto it = dom.find(rd.dominant_representative(mu));
  return it == dom.end() ? Int(0) : it->second;
}

// Weyl dimension formula, exact.
inline Int weyl_dimension(const RootDatum& rd, const Vec& lambda) {
  if (!rd.is_dominant_weight(lambda)) throw not_dominant("weight not dominant");
  Rat dim(1);
  Vec num = vec_add(vec_scale(2, lambda), rd.two_rho);
  for (const auto& bv : rd.positive_coroots) {
    Int a = dot(num, bv), b = dot(rd.two_rho, bv);
    dim *= Rat(a, b);
  }
  dim.canonicalize();
  if (dim.get_den() != 1)
    throw computation_error("Weyl dimension formula not integral");
  return dim.get_num();
}

}  // namespace satkit

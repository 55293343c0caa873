#pragma once

#include "satkit/numeric.hpp"

namespace satkit {

// Exact arithmetic in Q(zeta_e) for e in {1, 3, 4}, enough for the roots of
// unity that appear as inertia characters and twisted-trace evaluation points.
// Elements are a + b*zeta with zeta^2 = -1 - zeta (e = 3) or zeta^2 = -1
// (e = 4); for e = 1 the zeta coordinate must vanish.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), a_(0), b_(0) {}
  Cyclotomic(const Rat& a) : order_(1), a_(a), b_(0) {}
  Cyclotomic(long a) : order_(1), a_(a), b_(0) {}
  Cyclotomic(const Rat& a, const Rat& b, int order) {
    if (order != 1 && order != 3 && order != 4)
      throw spec_error("unsupported cyclotomic order");
    order_ = order;
    a_ = a;
    b_ = b;
    reduce();
  }

  static Cyclotomic zeta(int order) {
    if (order == 1) return Cyclotomic(Rat(1));
    if (order == 2) return Cyclotomic(Rat(-1));
    return Cyclotomic(Rat(0), Rat(1), order);
  }

  int order() const { return order_; }
  const Rat& rational_part() const { return a_; }
  const Rat& zeta_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    match(o);
    a_ += o.a_;
    b_ += o.b_;
    reduce();
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }
  Cyclotomic operator+(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r += o;
    return r;
  }
  Cyclotomic operator-(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r -= o;
    return r;
  }

  Cyclotomic operator*(const Cyclotomic& o) const {
    Cyclotomic x = *this;
    x.match(o);
    Cyclotomic r;
    r.order_ = x.order_;
    // zeta^2 is -1 - zeta for order 3 and -1 for order 4
    Rat sq_a(-1), sq_b = x.order_ == 3 ? Rat(-1) : Rat(0);
    Rat cross = x.b_ * o.b_;
    r.a_ = x.a_ * o.a_ + cross * sq_a;
    r.b_ = x.a_ * o.b_ + x.b_ * o.a_ + cross * sq_b;
    r.reduce();
    return r;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const {
    if (is_zero()) throw computation_error("inverse of zero");
    if (b_ == 0) return Cyclotomic(Rat(1) / a_);
    // conjugate and norm: a^2 + b^2 for order 4, a^2 - a b + b^2 for order 3
    Cyclotomic conj;
    conj.order_ = order_;
    Rat norm;
    if (order_ == 4) {
      conj.a_ = a_;
      conj.b_ = -b_;
      norm = a_ * a_ + b_ * b_;
    } else {
      conj.a_ = a_ - b_;
      conj.b_ = -b_;
      norm = a_ * a_ - a_ * b_ + b_ * b_;
    }
    conj.a_ /= norm;
    conj.b_ /= norm;
    conj.reduce();
    return conj;
  }

  Cyclotomic power(const Int& e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    Int n = e < 0 ? Int(-e) : e;
    Cyclotomic r(Rat(1));
    Cyclotomic sq = base;
    while (n > 0) {
      if (mpz_odd_p(n.get_mpz_t())) r *= sq;
      sq = sq * sq;
      n /= 2;
    }
    return r;
  }

  bool operator==(const Cyclotomic& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (a_ != 0) s = a_.get_str();
    if (b_ != 0) {
      std::string z = "z" + std::to_string(order_);
      if (b_ == 1)
        s += s.empty() ? z : "+" + z;
      else if (b_ == -1)
        s += "-" + z;
      else if (b_ > 0)
        s += (s.empty() ? "" : "+") + b_.get_str() + "*" + z;
      else
        s += b_.get_str() + "*" + z;
    }
    return s;
  }

 private:
  void reduce() {
    if (b_ == 0) order_ = 1;
  }
  void match(const Cyclotomic& o) {
    if (o.order_ == 1 || o.order_ == order_) return;
    if (order_ == 1) {
      order_ = o.order_;
      return;
    }
    throw computation_error("mixed cyclotomic orders");
  }
  friend class CycPolyFriend;

  int order_;
  Rat a_, b_;
};

// A root of unity of exact order d, for the orders that occur here.
inline Cyclotomic root_of_unity(const Int& d) {
  if (d == 1) return Cyclotomic(Rat(1));
  if (d == 2) return Cyclotomic(Rat(-1));
  if (d == 3 || d == 4) return Cyclotomic::zeta(static_cast<int>(d.get_si()));
  throw computation_error("unsupported root of unity order " + d.get_str());
}

// Laurent polynomial in q^{1/2} with cyclotomic coefficients; keys store
// twice the exponent, matching QPolynomial.
struct CycPoly {
  std::map<long, Cyclotomic> terms;

  CycPoly() = default;
  explicit CycPoly(const Cyclotomic& c) {
    if (!c.is_zero()) terms[0] = c;
  }
  static CycPoly monomial(const Cyclotomic& c, long exp2) {
    CycPoly p;
    if (!c.is_zero()) p.terms[exp2] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  CycPoly& operator+=(const CycPoly& o) {
    for (const auto& [e, c] : o.terms) {
      Cyclotomic& x = terms[e];
      x += c;
      if (x.is_zero()) terms.erase(e);
    }
    return *this;
  }
  CycPoly operator+(const CycPoly& o) const {
    CycPoly r = *this;
    r += o;
    return r;
  }
  CycPoly operator-(const CycPoly& o) const {
    CycPoly r = *this;
    for (const auto& [e, c] : o.terms) {
      Cyclotomic& x = r.terms[e];
      x -= c;
      if (x.is_zero()) r.terms.erase(e);
    }
    return r;
  }
  CycPoly operator*(const CycPoly& o) const {
    CycPoly r;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Cyclotomic& x = r.terms[e1 + e2];
        x += c1 * c2;
        if (x.is_zero()) r.terms.erase(e1 + e2);
      }
    return r;
  }

  bool operator==(const CycPoly& o) const { return terms == o.terms; }
  bool operator!=(const CycPoly& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")";
      if (it->first != 0) {
        s += "*q^";
        if (it->first % 2 == 0)
          s += std::to_string(it->first / 2);
        else
          s += "(" + std::to_string(it->first) + "/2)";
      }
    }
    return s;
  }
};

// Multivariate Laurent polynomial with cyclotomic coefficients; exponent
// vectors all share one length. Used for the twisted-trace identities.
struct MultiPoly {
  std::map<std::vector<long>, Cyclotomic> terms;

  static MultiPoly monomial(const Cyclotomic& c, const std::vector<long>& e) {
    MultiPoly p;
    if (!c.is_zero()) p.terms[e] = c;
    return p;
  }
  static MultiPoly constant(std::size_t nvars, const Cyclotomic& c) {
    return monomial(c, std::vector<long>(nvars, 0));
  }

  bool is_zero() const { return terms.empty(); }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) {
      Cyclotomic& x = terms[e];
      x += c;
      if (x.is_zero()) terms.erase(e);
    }
    return *this;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) {
      Cyclotomic& x = r.terms[e];
      x -= c;
      if (x.is_zero()) r.terms.erase(e);
    }
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<long> e = e1;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        Cyclotomic& x = r.terms[e];
        x += c1 * c2;
        if (x.is_zero()) r.terms.erase(e);
      }
    return r;
  }

  bool operator==(const MultiPoly& o) const { return terms == o.terms; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
};

}  // namespace satkit

#pragma once

#include "satkit/numeric.hpp"

namespace satkit {

// Laurent polynomial in q^{1/2} with rational coefficients. Keys store twice
// the exponent, so integer powers of q sit at even keys.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(const Rat& c) {
    if (c != 0) coef_[0] = c;
  }

  static QPolynomial monomial(const Rat& c, long half_exp2) {
    QPolynomial p;
    if (c != 0) p.coef_[half_exp2] = c;
    return p;
  }
  // c * q^e with integer e
  static QPolynomial q_power(long e, const Rat& c = Rat(1)) {
    return monomial(c, 2 * e);
  }

  const std::map<long, Rat>& terms() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }

  Rat coefficient(long exp2) const {
    auto it = coef_.find(exp2);
    return it == coef_.end() ? Rat(0) : it->second;
  }
  Rat coefficient_q(long e) const { return coefficient(2 * e); }

  long max_exp2() const {
    if (coef_.empty()) throw computation_error("degree of zero polynomial");
    return coef_.rbegin()->first;
  }
  long min_exp2() const {
    if (coef_.empty()) throw computation_error("degree of zero polynomial");
    return coef_.begin()->first;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.coef_) {
      Rat& x = coef_[e];
      x += c;
      if (x == 0) coef_.erase(e);
    }
    return *this;
  }
  QPolynomial operator+(const QPolynomial& o) const {
    QPolynomial r = *this;
    r += o;
    return r;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.coef_) {
      Rat& x = coef_[e];
      x -= c;
      if (x == 0) coef_.erase(e);
    }
    return *this;
  }
  QPolynomial operator-(const QPolynomial& o) const {
    QPolynomial r = *this;
    r -= o;
    return r;
  }
  QPolynomial operator*(const QPolynomial& o) const {
    QPolynomial r;
    for (const auto& [e1, c1] : coef_)
      for (const auto& [e2, c2] : o.coef_) {
        Rat& x = r.coef_[e1 + e2];
        x += c1 * c2;
        if (x == 0) r.coef_.erase(e1 + e2);
      }
    return r;
  }
  QPolynomial operator*(const Rat& c) const {
    QPolynomial r;
    if (c == 0) return r;
    for (const auto& [e, x] : coef_) r.coef_[e] = x * c;
    return r;
  }
  QPolynomial shifted(long half_exp2) const {
    QPolynomial r;
    for (const auto& [e, x] : coef_) r.coef_[e + half_exp2] = x;
    return r;
  }

  bool operator==(const QPolynomial& o) const { return coef_ == o.coef_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }
  bool operator<(const QPolynomial& o) const { return coef_ < o.coef_; }

  // Evaluate at q = value (polynomial must have integer exponents).
  Rat evaluate_q(const Rat& value) const {
    Rat total(0);
    for (const auto& [e2, c] : coef_) {
      if (e2 % 2 != 0)
        throw computation_error("half-integral exponent in evaluation");
      long e = e2 / 2;
      Rat p(1);
      Rat base = e >= 0 ? value : Rat(1) / value;
      for (long i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
      total += c * p;
    }
    return total;
  }

  std::string to_string() const {
    if (coef_.empty()) return "0";
    std::string s;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
      auto [e2, c] = *it;
      bool neg = c < 0;
      Rat a = neg ? Rat(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      std::string mono;
      if (e2 == 0)
        mono = "";
      else if (e2 == 2)
        mono = "q";
      else if (e2 % 2 == 0)
        mono = "q^" + std::to_string(e2 / 2);
      else if (e2 == 1)
        mono = "q^(1/2)";
      else
        mono = "q^(" + std::to_string(e2) + "/2)";
      if (mono.empty())
        s += a.get_str();
      else if (a == 1)
        s += mono;
      else
        s += a.get_str() + "*" + mono;
    }
    return s;
  }

 private:
  std::map<long, Rat> coef_;
};

// Parse the output of to_string (used for JSON round trips).
inline QPolynomial parse_qpolynomial(const std::string& s) {
  QPolynomial out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  skip_ws();
  if (s.substr(i) == "0") return out;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  for (;;) {
    skip_ws();
    // coefficient (optional) then monomial (optional)
    std::string num;
    while (i < s.size() && (isdigit(s[i]) || s[i] == '/')) num += s[i++];
    Rat c = num.empty() ? Rat(1) : Rat(num);
    if (i < s.size() && s[i] == '*') ++i;
    long e2 = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e2 = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '(') {
          ++i;
          std::string frac;
          while (i < s.size() && s[i] != ')') frac += s[i++];
          ++i;  // ')'
          auto slash = frac.find('/');
          e2 = std::stol(frac.substr(0, slash));
          if (slash == std::string::npos) e2 *= 2;
        } else {
          std::string exp;
          if (i < s.size() && s[i] == '-') exp += s[i++];
          while (i < s.size() && isdigit(s[i])) exp += s[i++];
          e2 = 2 * std::stol(exp);
        }
      }
    }
    c.canonicalize();
    out += QPolynomial::monomial(neg ? Rat(-c) : c, e2);
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] == '+') neg = false;
    else if (s[i] == '-') neg = true;
    else throw spec_error("bad polynomial string '" + s + "'");
    ++i;
  }
  return out;
}

}  // namespace satkit

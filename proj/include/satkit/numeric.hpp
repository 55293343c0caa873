#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace satkit {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

// Error hierarchy. spec_error: the request itself is malformed (CLI exit 2).
// computation_error: a well-formed request hit an unsupported or inconsistent
// case (CLI exit 3).
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct computation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_finite_order : computation_error {
  using computation_error::computation_error;
};
struct unknown_type : spec_error {
  using spec_error::spec_error;
};
struct rank_too_large : spec_error {
  using spec_error::spec_error;
};
struct group_too_large : computation_error {
  using computation_error::computation_error;
};
struct not_dominant : spec_error {
  using spec_error::spec_error;
};
struct not_diagram_automorphism : spec_error {
  using spec_error::spec_error;
};
struct order_mismatch : spec_error {
  using spec_error::spec_error;
};
struct unsupported_folding : computation_error {
  using computation_error::computation_error;
};
struct ambiguous_coroot_image : computation_error {
  using computation_error::computation_error;
};
struct ambiguous_torsion_lift : computation_error {
  using computation_error::computation_error;
};
struct decomposition_failure : computation_error {
  using computation_error::computation_error;
};
struct unsupported_model : spec_error {
  using spec_error::spec_error;
};
struct singular_change : computation_error {
  using computation_error::computation_error;
};
struct twisted_evaluation_unsupported : computation_error {
  using computation_error::computation_error;
};
struct bad_dimension : spec_error {
  using spec_error::spec_error;
};
struct bad_signature : spec_error {
  using spec_error::spec_error;
};
struct identity_failure : computation_error {
  using computation_error::computation_error;
};

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline std::string vec_to_string(const Vec& a, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += sep;
    s += a[i].get_str();
  }
  return s;
}

}  // namespace satkit

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "satkit/galois_fold.hpp"

using namespace satkit;

namespace {

Vec vec(std::vector<long> xs) {
  Vec v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
  return v;
}

CoinvariantLattice gl_reversal_fold(int n) {
  RootDatum rd = build_root_datum("GL" + std::to_string(n));
  return coweight_coinvariants(rd, pinned_action(rd, reversal_permutation(rd)));
}

}  // namespace

TEST_CASE("pinned automorphisms") {
  SECTION("GL3 reversal has order 2") {
    RootDatum rd = build_root_datum("GL3");
    auto psi = pinned_action(rd, reversal_permutation(rd));
    REQUIRE(psi.order == 2);
    REQUIRE((psi.cochar_map * psi.cochar_map).is_identity());
    // e_i -> -e_{4-i}
    REQUIRE(psi.cochar_map.apply(vec({1, 0, 0})) == vec({0, 0, -1}));
  }
  SECTION("GU recipe on GL4xGL1 has order 2") {
    RootDatum rd = build_root_datum("GL4xGL1");
    auto psi = gu_pinned_action(rd);
    REQUIRE(psi.order == 2);
    REQUIRE((psi.cochar_map * psi.cochar_map).is_identity());
    REQUIRE(psi.cochar_map.apply(vec({1, 0, 0, 0, 0})) ==
            vec({0, 0, 0, -1, 1}));
    REQUIRE(psi.cochar_map.apply(vec({0, 0, 0, 0, 1})) == vec({0, 0, 0, 0, 1}));
  }
  SECTION("identity permutation") {
    RootDatum rd = build_root_datum("GL3xGL1");
    auto psi = pinned_action(rd, identity_permutation(rd));
    REQUIRE(psi.order == 1);
    REQUIRE(psi.cochar_map.is_identity());
  }
  SECTION("non-automorphisms are rejected") {
    RootDatum rd = build_root_datum("B3");
    // reversal is not a diagram automorphism of B3
    REQUIRE_THROWS_AS(pinned_action(rd, reversal_permutation(rd)),
                      not_diagram_automorphism);
  }
  SECTION("order mismatch is reported") {
    RootDatum rd = build_root_datum("GL3");
    REQUIRE_THROWS_AS(pinned_action(rd, reversal_permutation(rd), 3),
                      order_mismatch);
  }
  SECTION("SL4 reversal permutes the simple data") {
    RootDatum rd = build_root_datum("SL4");
    auto psi = pinned_action(rd, reversal_permutation(rd));
    REQUIRE(psi.order == 2);
    REQUIRE(psi.node_perm == std::vector<std::size_t>{2, 1, 0});
  }
}

TEST_CASE("coweight coinvariants") {
  SECTION("GL3 + reversal is Z + Z/2") {
    auto cl = gl_reversal_fold(3);
    REQUIRE(cl.quotient.free_rank() == 1);
    REQUIRE(cl.quotient.torsion() == std::vector<Int>{Int(2)});
    Vec e1 = cl.project(vec({1, 0, 0}));
    REQUIRE(e1 == vec({1, 0}));  // (1;0)
    Vec e2 = cl.project(vec({0, 1, 0}));
    REQUIRE(e2 == vec({0, 1}));  // (0;1), the torsion generator
    REQUIRE(is_zero(cl.project(vec({1, 0, 1}))));
  }
  SECTION("GL4 + reversal is Z^2 via (a,b,c,d) -> (a-d, b-c)") {
    auto cl = gl_reversal_fold(4);
    REQUIRE(cl.quotient.free_rank() == 2);
    REQUIRE(cl.quotient.torsion().empty());
    REQUIRE(cl.project(vec({1, 0, 0, 0})) == vec({1, 0}));
    REQUIRE(cl.project(vec({0, 1, 0, 0})) == vec({0, 1}));
    REQUIRE(cl.project(vec({0, 0, 1, 0})) == vec({0, -1}));
    REQUIRE(cl.project(vec({0, 0, 0, 1})) == vec({-1, 0}));
  }
  SECTION("GL3xGL1 + GU recipe is torsion-free Z^2") {
    RootDatum rd = build_root_datum("GL3xGL1");
    auto cl = coweight_coinvariants(rd, gu_pinned_action(rd));
    REQUIRE(cl.quotient.free_rank() == 2);
    REQUIRE(cl.quotient.torsion().empty());
  }
}

TEST_CASE("dominance on the coinvariant lattice") {
  SECTION("GL3-fold") {
    auto cl = gl_reversal_fold(3);
    REQUIRE(is_dominant(cl, vec({1, 0})));
    REQUIRE(!is_dominant(cl, vec({-1, 0})));
    REQUIRE(is_dominant(cl, vec({0, 1})));
  }
  SECTION("GL4-fold: (a,b) dominant iff a >= b >= 0") {
    auto cl = gl_reversal_fold(4);
    REQUIRE(is_dominant(cl, vec({1, 1})));
    REQUIRE(is_dominant(cl, vec({2, 1})));
    REQUIRE(!is_dominant(cl, vec({0, 2})));
    REQUIRE(!is_dominant(cl, vec({1, -1})));
  }
  SECTION("lift independence") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int n : {3, 4, 5}) {
      auto cl = gl_reversal_fold(n);
      std::vector<Vec> probes;
      for (int t = 0; t < 6; ++t) {
        Vec x(cl.quotient.free_rank() + cl.quotient.torsion().size());
        for (auto& c : x) c = entry(rng);
        probes.push_back(cl.quotient.reduce(x));
      }
      for (const auto& nf : probes) {
        bool expected = is_dominant(cl, nf);
        for (int t = 0; t < 5; ++t) {
          // random lift: add an element of the image of (1 - gamma)
          Vec noise(cl.datum.rank);
          for (auto& c : noise) c = entry(rng);
          Vec lift = vec_add(cl.quotient.lift(nf),
                             vec_sub(noise, cl.psi.cochar_map.apply(noise)));
          REQUIRE(cl.quotient.normal_form(lift) == nf);
          bool dom = true;
          for (const auto& a : cl.relative_positive_roots)
            if (dot(a, lift) < 0) dom = false;
          REQUIRE(dom == expected);
        }
      }
    }
  }
}

TEST_CASE("order_leq") {
  SECTION("GL3-fold: (0;1) <= (1;0)") {
    auto cl = gl_reversal_fold(3);
    REQUIRE(order_leq(cl, vec({0, 1}), vec({1, 0})));
    REQUIRE(!order_leq(cl, vec({1, 0}), vec({0, 1})));
    REQUIRE(order_leq(cl, vec({1, 0}), vec({1, 0})));
  }
  SECTION("GL4-fold: (0,0) <= (1,1)") {
    auto cl = gl_reversal_fold(4);
    REQUIRE(order_leq(cl, vec({0, 0}), vec({1, 1})));
    REQUIRE(!order_leq(cl, vec({0, 0}), vec({1, 0})));  // odd pairing gap
    REQUIRE(!order_leq(cl, vec({1, 1}), vec({0, 0})));
  }
}

TEST_CASE("pairing_2rho") {
  auto cl3 = gl_reversal_fold(3);
  REQUIRE(pairing_2rho(cl3, cl3.quotient.zero_nf()) == 0);
  REQUIRE(pairing_2rho(cl3, vec({1, 0})) == 2);
  REQUIRE(pairing_2rho(cl3, vec({0, 1})) == 0);
  auto cl4 = gl_reversal_fold(4);
  REQUIRE(pairing_2rho(cl4, vec({1, 1})) == 4);
}

TEST_CASE("closure strata") {
  SECTION("GL3-fold from (1;0)") {
    auto cl = gl_reversal_fold(3);
    auto strata = closure_strata(cl, vec({1, 0}));
    REQUIRE(strata == std::vector<Vec>{vec({1, 0}), vec({0, 1})});
    REQUIRE(pairing_2rho(cl, strata[0]) == 2);
    REQUIRE(pairing_2rho(cl, strata[1]) == 0);
  }
  SECTION("GL4-fold from (1,1)") {
    auto cl = gl_reversal_fold(4);
    auto strata = closure_strata(cl, vec({1, 1}));
    REQUIRE(strata == std::vector<Vec>{vec({1, 1}), vec({0, 0})});
  }
  SECTION("zero has only itself") {
    auto cl = gl_reversal_fold(5);
    REQUIRE(closure_strata(cl, cl.quotient.zero_nf()) ==
            std::vector<Vec>{cl.quotient.zero_nf()});
  }
  SECTION("pairing gaps are even") {
    for (int n : {3, 4, 5, 6}) {
      auto cl = gl_reversal_fold(n);
      Vec mu = cl.quotient.zero_nf();
      // a moderately deep dominant weight
      mu = cl.project(cl.datum.two_rho);  // 2rho^vee = 2rho for GL_n
      for (const auto& lam : closure_strata(cl, mu)) {
        Int gap = pairing_2rho(cl, mu) - pairing_2rho(cl, lam);
        REQUIRE(gap >= 0);
        REQUIRE(gap % 2 == 0);
      }
    }
  }
}

TEST_CASE("fold_fixed_group") {
  SECTION("GL_{2n+1} + reversal gives B_n with component group Z/2") {
    for (int n : {1, 2, 3}) {
      RootDatum rd = build_root_datum("GL" + std::to_string(2 * n + 1));
      auto psi = pinned_action(rd, reversal_permutation(rd));
      auto ed = fold_fixed_group(rd, psi);
      REQUIRE(ed.pi0 == std::vector<Int>{Int(2)});
      if (n == 1)
        REQUIRE(ed.folded_type == "A1");
      else
        REQUIRE(ed.folded_type == "B" + std::to_string(n));
    }
  }
  SECTION("GL4 + reversal gives Sp_4") {
    RootDatum rd = build_root_datum("GL4");
    auto psi = pinned_action(rd, reversal_permutation(rd));
    auto ed = fold_fixed_group(rd, psi);
    REQUIRE(ed.pi0.empty());
    REQUIRE(ed.folded_type == "C2");
    std::set<Vec> roots;
    for (const auto& r : ed.folded.positive_roots) {
      roots.insert(r);
      roots.insert(vec_neg(r));
    }
    std::set<Vec> expected = {vec({1, -1}), vec({-1, 1}), vec({1, 1}),
                              vec({-1, -1}), vec({2, 0}), vec({-2, 0}),
                              vec({0, 2}), vec({0, -2})};
    REQUIRE(roots == expected);
    REQUIRE(ed.relative_weyl.order() == 8);
  }
  SECTION("GL3xGL1 + GU recipe is connected") {
    RootDatum rd = build_root_datum("GL3xGL1");
    auto ed = fold_fixed_group(rd, gu_pinned_action(rd));
    REQUIRE(ed.pi0.empty());
    // GO_3: an A1 plus a one-dimensional center
    REQUIRE(ed.folded_type == "A1+GL1^1");
  }
  SECTION("trivial action gives the dual datum") {
    RootDatum rd = build_root_datum("GL3");
    auto ed = fold_fixed_group(rd, pinned_action(rd, identity_permutation(rd)));
    REQUIRE(ed.pi0.empty());
    REQUIRE(ed.folded.positive_roots.size() == 3);
    REQUIRE(ed.folded_type == "A2+GL1^1 (dual)");
  }
  SECTION("folding table") {
    // A_{2n-1} -> C_n
    {
      RootDatum rd = build_root_datum("SL4");
      auto ed = fold_fixed_group(rd, pinned_action(rd, reversal_permutation(rd)));
      REQUIRE(ed.folded_type == "C2");
    }
    // A_{2n} -> B_n
    {
      RootDatum rd = build_root_datum("SL5");
      auto ed = fold_fixed_group(rd, pinned_action(rd, reversal_permutation(rd)));
      REQUIRE(ed.folded_type == "B2");
    }
    // D_{n+1} -> B_n (swap the two fork nodes of D4: nodes 2 and 3)
    {
      RootDatum rd = build_root_datum("D4");
      auto ed = fold_fixed_group(rd, pinned_action(rd, {0, 1, 3, 2}));
      REQUIRE(ed.folded_type == "B3");
    }
    // D4 triality -> G2 (rotate nodes 0 -> 2 -> 3 -> 0, node 1 fixed)
    {
      RootDatum rd = build_root_datum("D4");
      auto psi = pinned_action(rd, {2, 1, 3, 0});
      REQUIRE(psi.order == 3);
      auto ed = fold_fixed_group(rd, psi);
      REQUIRE(ed.folded_type == "G2");
      REQUIRE(ed.relative_weyl.order() == 12);
    }
    // E6 -> F4 (Bourbaki: swap 0<->5, 2<->4, fix 1 and 3)
    {
      RootDatum rd = build_root_datum("E6");
      auto ed = fold_fixed_group(rd, pinned_action(rd, {5, 1, 4, 3, 2, 0}));
      REQUIRE(ed.folded_type == "F4");
      REQUIRE(ed.relative_weyl.order() == 1152);
    }
  }
  SECTION("relative Weyl order equals the size of the fixed subgroup of W") {
    struct Case {
      const char* name;
      bool gu;
    };
    for (const char* name : {"GL3", "GL4", "GL5", "SL4", "SL5", "D4"}) {
      RootDatum rd = build_root_datum(name);
      auto psi = std::string(name) == "D4"
                     ? pinned_action(rd, {0, 1, 3, 2})
                     : pinned_action(rd, reversal_permutation(rd));
      auto ed = fold_fixed_group(rd, psi);
      WeylGroup w = weyl_group(rd);
      std::size_t fixed = 0;
      for (const auto& g : w.elements)
        if (psi.char_map * g == g * psi.char_map) ++fixed;
      REQUIRE(ed.relative_weyl.order() == fixed);
    }
  }
}

TEST_CASE("dominant classes biject with relative Weyl orbits in a box") {
  // rank <= 2 brute force: spread every class through the relative Weyl
  // action on the free part and check each orbit has exactly one dominant
  // member (torsion coordinates are fixed by the action).
  for (int n : {3, 4}) {
    auto cl = gl_reversal_fold(n);
    RootDatum rd = build_root_datum("GL" + std::to_string(n));
    auto psi = pinned_action(rd, reversal_permutation(rd));
    auto ed = fold_fixed_group(rd, psi, cl);
    std::size_t f = cl.quotient.free_rank();
    std::size_t t = cl.quotient.torsion().size();
    std::vector<Vec> box;
    std::function<void(std::size_t, Vec)> fill = [&](std::size_t i, Vec cur) {
      if (i == f + t) {
        box.push_back(cl.quotient.reduce(cur));
        return;
      }
      long lo = i < f ? -3 : 0;
      long hi = 3;
      for (long v = lo; v <= hi; ++v) {
        cur[i] = v;
        fill(i + 1, cur);
      }
    };
    fill(0, Vec(f + t, Int(0)));
    std::set<Vec> seen(box.begin(), box.end());
    std::set<Vec> visited;
    for (const auto& nf : seen) {
      if (visited.count(nf)) continue;
      // orbit under the relative Weyl group
      std::set<Vec> orbit;
      for (const auto& g : ed.relative_weyl.elements) {
        Vec fp = g.apply(cl.quotient.free_part(nf));
        Vec full = fp;
        Vec tp = cl.quotient.torsion_part(nf);
        full.insert(full.end(), tp.begin(), tp.end());
        orbit.insert(cl.quotient.reduce(full));
      }
      int dominant_count = 0;
      for (const auto& x : orbit) {
        if (is_dominant(cl, x)) ++dominant_count;
        visited.insert(x);
      }
      REQUIRE(dominant_count == 1);
    }
  }
}

TEST_CASE("duality reversal on the lattice") {
  // matches the node-permutation reversal whenever that one is nontrivial
  for (int n : {3, 4, 5}) {
    RootDatum rd = build_root_datum("GL" + std::to_string(n));
    PinnedAutomorphism a = gl_reversal_action(rd);
    PinnedAutomorphism b = pinned_action(rd, reversal_permutation(rd));
    REQUIRE(a.cochar_map == b.cochar_map);
  }

  // GL2 has a trivial node permutation but a nontrivial duality involution
  RootDatum gl2 = build_root_datum("GL2");
  PinnedAutomorphism psi = gl_reversal_action(gl2);
  REQUIRE(psi.order == 2);
  CoinvariantLattice cl = coweight_coinvariants(gl2, psi);
  REQUIRE(cl.quotient.free_rank() == 1);
  REQUIRE(cl.quotient.torsion().empty());
  EchelonData ed = fold_fixed_group(gl2, psi, cl);
  REQUIRE(ed.folded_type == "A1");
  REQUIRE(ed.pi0.empty());

  REQUIRE_THROWS_AS(gl_reversal_action(build_root_datum("SL3")), spec_error);
}

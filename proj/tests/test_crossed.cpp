#include "doctest.h"

#include <algorithm>

#include "pgroup/catalog.hpp"
#include "pgroup/crossed.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/group.hpp"

using namespace pgroup;

TEST_SUITE("crossed modules") {
  TEST_CASE("identity crossed module validates") {
    for (const char* spec : {"q8", "heisenberg(3)", "cyclic(9)", "d8"}) {
      GroupPtr g = parse_group_spec(spec);
      CrossedModule cm = identity_crossed_module(g);
      CHECK(!validate_crossed_module(cm).has_value());
      CHECK(cm.m == g);
      CHECK(cm.mu.apply(g->order - 1) == g->order - 1);
    }
  }

  TEST_CASE("normal inclusion validates") {
    GroupPtr h = parse_group_spec("heisenberg(3)");
    CrossedModule cm = inclusion_crossed_module(center(h));
    CHECK(!validate_crossed_module(cm).has_value());
    CHECK(cm.m->order == 3);
    // Central subgroup: the conjugation action is trivial.
    for (int a = 0; a < h->order; ++a) {
      for (int x = 0; x < 3; ++x) CHECK(cm.action.apply(a, x) == x);
    }

    // The rotation subgroup of d8 is normal of index 2 and nonabelian
    // conjugation shows up in the action table.
    GroupPtr d8 = parse_group_spec("d8");
    int r = -1;
    for (int x = 1; x < d8->order && r < 0; ++x) {
      if (element_order(*d8, x) == 4) r = x;
    }
    REQUIRE(r > 0);
    Subgroup rot = subgroup_closure(d8, {r});
    CHECK(rot.order() == 4);
    CHECK(is_normal(rot));
    CrossedModule rm = inclusion_crossed_module(rot);
    CHECK(!validate_crossed_module(rm).has_value());
    bool nontrivial = false;
    for (int a = 0; a < d8->order && !nontrivial; ++a) {
      for (int x = 0; x < rm.m->order; ++x) {
        if (rm.action.apply(a, x) != x) nontrivial = true;
      }
    }
    CHECK(nontrivial);
  }

  TEST_CASE("non-normal inclusion is rejected with an equivariance witness") {
    GroupPtr d8 = parse_group_spec("d8");
    // Find a non-normal subgroup of order 2 (a reflection).
    Subgroup bad{d8, {}};
    bool found = false;
    for (int x = 1; x < d8->order && !found; ++x) {
      Subgroup s = subgroup_closure(d8, {x});
      if (s.order() == 2 && !is_normal(s)) {
        bad = s;
        found = true;
      }
    }
    REQUIRE(found);
    CrossedModule cm = inclusion_crossed_module(bad);
    auto v = validate_crossed_module(cm);
    REQUIRE(v.has_value());
    CHECK(v->law == "equivariance");
    // The witness pair really does violate mu(^g m) = g mu(m) g^-1.
    int g = v->witness[0], m = v->witness[1];
    CHECK(cm.mu.apply(cm.action.apply(g, m)) !=
          d8->conj(g, cm.mu.apply(m)));
  }

  TEST_CASE("trivial crossed module needs an abelian source") {
    GroupPtr c9 = parse_group_spec("cyclic(9)");
    GroupPtr h = parse_group_spec("heisenberg(3)");
    CrossedModule cm = trivial_crossed_module(c9, h);
    CHECK(!validate_crossed_module(cm).has_value());
    CHECK_THROWS_AS(trivial_crossed_module(h, c9), InputError);
  }

  TEST_CASE("validator pinpoints a corrupted action") {
    GroupPtr h = parse_group_spec("heisenberg(3)");
    CrossedModule cm = identity_crossed_module(h);
    // Swap two non-identity values in one permutation row.
    auto perm = cm.action.perm;
    std::swap(perm[1][1], perm[1][2]);
    cm.action.perm = perm;
    auto v = validate_crossed_module(cm);
    REQUIRE(v.has_value());
    CHECK((v->law == "action" || v->law == "equivariance" ||
           v->law == "peiffer"));
  }
}

TEST_SUITE("pullbacks") {
  TEST_CASE("identity against identity is the diagonal") {
    GroupPtr h = parse_group_spec("heisenberg(3)");
    CrossedModule id1 = identity_crossed_module(h);
    PullbackResult pb = pullback(id1, id1);
    CHECK(pb.k->order == h->order);
    for (int i = 0; i < pb.k->order; ++i) {
      CHECK(pb.pairs[i].first == pb.pairs[i].second);
      CHECK(pb.pi1.apply(i) == pb.pi2.apply(i));
    }
    CHECK(!hom_violation(pb.pi1).has_value());
    CHECK(fingerprint(pb.k) == fingerprint(h));
  }

  TEST_CASE("trivial maps give the direct product") {
    GroupPtr a = parse_group_spec("cyclic(4)");
    GroupPtr b = parse_group_spec("ea(2,2)");
    GroupPtr g = parse_group_spec("cyclic(2)");
    PullbackResult pb =
        pullback(trivial_crossed_module(a, g), trivial_crossed_module(b, g));
    CHECK(pb.k->order == a->order * b->order);
    GroupPtr direct = parse_group_spec("direct_product(cyclic(4), ea(2,2))");
    CHECK(fingerprint(pb.k) == fingerprint(direct));
  }

  TEST_CASE("center inclusion against identity counts fibers") {
    GroupPtr h = parse_group_spec("heisenberg(3)");
    CrossedModule inc = inclusion_crossed_module(center(h));
    CrossedModule id = identity_crossed_module(h);
    PullbackResult pb = pullback(inc, id);
    // Pairs (z, x) with z central and x = image of z: one per center element.
    CHECK(pb.k->order == 3);
    CHECK(pb.pair_index(0, 0) == 0);
    // (0, 3) pairs the identity with a non-central element: not in K.
    CHECK_THROWS_AS(pb.pair_index(0, 3), InputError);
  }

  TEST_CASE("mismatched base groups are rejected") {
    GroupPtr a = parse_group_spec("cyclic(2)");
    GroupPtr g1 = parse_group_spec("cyclic(3)");
    GroupPtr g2 = parse_group_spec("cyclic(3)");
    CHECK_THROWS_AS(pullback(trivial_crossed_module(a, g1),
                             trivial_crossed_module(a, g2)),
                    InputError);
  }
}

TEST_SUITE("crossed squares") {
  // Small hand-built square: L = M = N = G = C2 with identity maps and
  // h == 0 everywhere (C2 is abelian so all commutator pairings vanish).
  static CrossedSquare c2_square() {
    GroupPtr c2 = parse_group_spec("cyclic(2)");
    CrossedModule id = identity_crossed_module(c2);
    CrossedSquare s;
    s.l = s.m = s.n = s.g = c2;
    s.alpha = s.beta = s.mu = s.nu = id.mu;
    s.act_l = s.act_m = s.act_n = id.action;
    s.h.assign(2, std::vector<int32_t>(2, 0));
    return s;
  }

  TEST_CASE("abelian identity square validates") {
    CrossedSquare s = c2_square();
    CHECK(!validate_crossed_square(s).has_value());
  }

  TEST_CASE("wrong pairing is caught") {
    CrossedSquare s = c2_square();
    s.h[1][1] = 1;  // claims [m, n] != 1 in an abelian group
    auto v = validate_crossed_square(s);
    REQUIRE(v.has_value());
    CHECK(v->axiom == "h-alpha");
  }

  TEST_CASE("commutator square over heisenberg(3) validates") {
    // L = M = N = G with alpha = beta = id and h(m, n) = m n m^-1 n^-1.
    GroupPtr h = parse_group_spec("heisenberg(3)");
    CrossedModule id = identity_crossed_module(h);
    CrossedSquare s;
    s.l = s.m = s.n = s.g = h;
    s.alpha = s.beta = s.mu = s.nu = id.mu;
    s.act_l = s.act_m = s.act_n = id.action;
    s.h.assign(h->order, std::vector<int32_t>(h->order));
    for (int x = 0; x < h->order; ++x) {
      for (int y = 0; y < h->order; ++y) {
        s.h[x][y] = h->mul(h->mul(x, y), h->mul(h->inverse(x), h->inverse(y)));
      }
    }
    CHECK(!validate_crossed_square(s).has_value());
  }
}

#include <vector>

#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/series.hpp"

using namespace pgroup;

namespace {

std::vector<int> orders_of(const SeriesResult& s) {
  std::vector<int> out;
  out.reserve(s.terms.size());
  for (const auto& t : s.terms) out.push_back(t.order());
  return out;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("heisenberg 27: all five series") {
    GroupPtr g = heisenberg(3);

    auto low = lower_central_series(g);
    CHECK(orders_of(low) == std::vector<int>{27, 3, 1});
    CHECK(low.stabilized_at == 2);

    auto up = upper_central_series(g);
    CHECK(orders_of(up) == std::vector<int>{1, 3, 27});
    CHECK(up.stabilized_at == 2);
    // Z_1 is exactly the derived subgroup here.
    CHECK(subgroup_eq(up.term_clamped(1), low.term_clamped(2)));

    auto der = derived_series(g);
    CHECK(orders_of(der) == std::vector<int>{27, 3, 1});

    // Exponent 3 kills the power contribution, so lambda tracks gamma.
    auto lam = lower_p_series(g, 3);
    CHECK(orders_of(lam) == std::vector<int>{27, 3, 1});

    auto fr = frattini_series(g, 3);
    CHECK(orders_of(fr) == std::vector<int>{27, 3, 1});
  }

  TEST_CASE("dihedral 16: chains of length four") {
    GroupPtr g = dihedral(16);

    auto low = lower_central_series(g);
    CHECK(orders_of(low) == std::vector<int>{16, 4, 2, 1});

    auto up = upper_central_series(g);
    CHECK(orders_of(up) == std::vector<int>{1, 2, 4, 16});
    CHECK(up.stabilized_at == 3);
    CHECK(up.term_clamped(0).is_trivial());
    CHECK(up.term_clamped(3).is_full());
    // Clamped access past the stable term keeps returning it.
    CHECK(up.term_clamped(9).is_full());

    auto der = derived_series(g);
    CHECK(orders_of(der) == std::vector<int>{16, 4, 1});

    auto lam = lower_p_series(g, 2);
    CHECK(orders_of(lam) == std::vector<int>{16, 4, 2, 1});

    auto fr = frattini_series(g, 2);
    CHECK(orders_of(fr) == std::vector<int>{16, 4, 2, 1});
  }

  TEST_CASE("cyclic 8: abelian degenerations") {
    GroupPtr g = cyclic(8);

    auto low = lower_central_series(g);
    CHECK(orders_of(low) == std::vector<int>{8, 1});
    CHECK(low.stabilized_at == 1);
    CHECK(low.term_clamped(1).is_full());
    CHECK(low.term_clamped(7).is_trivial());

    auto up = upper_central_series(g);
    CHECK(orders_of(up) == std::vector<int>{1, 8});

    auto der = derived_series(g);
    CHECK(orders_of(der) == std::vector<int>{8, 1});

    auto lam = lower_p_series(g, 2);
    CHECK(orders_of(lam) == std::vector<int>{8, 4, 2, 1});

    auto fr = frattini_series(g, 2);
    CHECK(orders_of(fr) == std::vector<int>{8, 4, 2, 1});
  }

  TEST_CASE("extraspecial exponent p^2 of order 27") {
    GroupPtr g = extraspecial_exp_p2(3);

    CHECK(orders_of(lower_central_series(g)) == std::vector<int>{27, 3, 1});
    CHECK(orders_of(upper_central_series(g)) == std::vector<int>{1, 3, 27});
    // lambda_2 = G^3 [G,G] = <a^3> already, and [a^3, G] = 1.
    CHECK(orders_of(lower_p_series(g, 3)) == std::vector<int>{27, 3, 1});
    CHECK(orders_of(frattini_series(g, 3)) == std::vector<int>{27, 3, 1});
  }

  TEST_CASE("quaternion and semidihedral chains") {
    CHECK(orders_of(lower_central_series(quaternion8())) ==
          std::vector<int>{8, 2, 1});
    CHECK(orders_of(upper_central_series(quaternion8())) ==
          std::vector<int>{1, 2, 8});

    GroupPtr sd = semidihedral16();
    CHECK(orders_of(lower_central_series(sd)) == std::vector<int>{16, 4, 2, 1});
    CHECK(orders_of(upper_central_series(sd)) == std::vector<int>{1, 2, 4, 16});
    CHECK(orders_of(lower_p_series(sd, 2)) == std::vector<int>{16, 4, 2, 1});
  }

  TEST_CASE("trivial group") {
    GroupPtr one = cyclic(1);
    auto low = lower_central_series(one);
    CHECK(orders_of(low) == std::vector<int>{1});
    CHECK(low.stabilized_at == 0);
    auto up = upper_central_series(one);
    CHECK(orders_of(up) == std::vector<int>{1});
    CHECK(orders_of(lower_p_series(one, 3)) == std::vector<int>{1});
  }

  TEST_CASE("p-group requirement on the p-dependent series") {
    CHECK_THROWS_AS(lower_p_series(cyclic(8), 3), InputError);
    CHECK_THROWS_AS(frattini_series(heisenberg(3), 2), InputError);
    CHECK_THROWS_AS(lower_p_series(cyclic(8), 6), InputError);
  }

  TEST_CASE("series kind names") {
    CHECK(series_kind_name(SeriesKind::lower_central) == "lower_central");
    CHECK(series_kind_name(SeriesKind::upper_central) == "upper_central");
    CHECK(series_kind_name(SeriesKind::derived) == "derived");
    CHECK(series_kind_name(SeriesKind::lower_p) == "lower_p");
    CHECK(series_kind_name(SeriesKind::frattini) == "frattini");
  }
}

TEST_SUITE("centralizer sweeps") {
  TEST_CASE("first sweep term is the centre") {
    for (GroupPtr g : {heisenberg(3), dihedral(8), quaternion8()}) {
      int p = g->prime;
      CHECK(subgroup_eq(script_D_n(g, 1), center(g)));
      CHECK(subgroup_eq(script_F_n(g, p, 1), center(g)));
    }
  }

  TEST_CASE("heisenberg 27 sweep against the derived series") {
    GroupPtr g = heisenberg(3);
    // Gamma_2 is central, so the second sweep already absorbs everything.
    Subgroup d2 = script_D_n(g, 2);
    CHECK(d2.is_full());
    Subgroup f2 = script_F_n(g, 3, 2);
    CHECK(f2.is_full());
  }

  TEST_CASE("dihedral 8 sweep terms") {
    GroupPtr g = dihedral(8);
    Subgroup d1 = script_D_n(g, 1);
    CHECK(d1.order() == 2);
    // Psi_2(D8) = Z(D8), so F_2 asks for [y,x] central for x in the centre:
    // every y qualifies.
    Subgroup f2 = script_F_n(g, 2, 2);
    CHECK(f2.is_full());
    Subgroup d2 = script_D_n(g, 2);
    CHECK(d2.is_full());
  }

  TEST_CASE("sweep terms are normal and nested upward") {
    for (GroupPtr g : {dihedral(16), semidihedral16(), heisenberg(3)}) {
      Subgroup prev = trivial_subgroup(g);
      for (int n = 1; n <= 3; ++n) {
        Subgroup dn = script_D_n(g, n);
        CHECK(is_normal(dn));
        CHECK(subgroup_leq(prev, dn));
        prev = dn;
      }
    }
  }

  TEST_CASE("abelian group sweeps are everything") {
    GroupPtr g = cyclic(9);
    CHECK(script_D_n(g, 1).is_full());
    CHECK(script_F_n(g, 3, 1).is_full());
  }
}

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/powerful.hpp"
#include "pgroup/series.hpp"

using namespace pgroup;

namespace {

bool all_substantive(const std::vector<TheoremCheck>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const TheoremCheck& c) {
    return c.is_substantive_pass();
  });
}

bool no_violations(const std::vector<TheoremCheck>& cs) {
  return std::none_of(cs.begin(), cs.end(),
                      [](const TheoremCheck& c) { return c.is_violation(); });
}

int count_id(const std::vector<TheoremCheck>& cs, const std::string& id) {
  return int(std::count_if(cs.begin(), cs.end(), [&](const TheoremCheck& c) {
    return c.theorem_id == id;
  }));
}

}  // namespace

TEST_SUITE("powerful predicates") {
  TEST_CASE("powerful groups") {
    CHECK(is_powerful(cyclic(16), 2));
    CHECK(is_powerful(cyclic(27), 3));
    CHECK(is_powerful(elementary_abelian(3, 2), 3));
    CHECK(is_powerful(extraspecial_exp_p2(3), 3));
    CHECK(is_powerful(extraspecial_exp_p2(5), 5));
    CHECK(is_powerful(cyclic(1), 2));
  }

  TEST_CASE("non-powerful groups") {
    CHECK_FALSE(is_powerful(dihedral(8), 2));
    CHECK_FALSE(is_powerful(quaternion8(), 2));
    CHECK_FALSE(is_powerful(dihedral(16), 2));
    CHECK_FALSE(is_powerful(semidihedral16(), 2));
    CHECK_FALSE(is_powerful(heisenberg(3), 3));
    CHECK_FALSE(is_powerful(heisenberg(5), 5));
  }

  TEST_CASE("powerful exponent parity split") {
    CHECK(powerful_exponent(3) == 3);
    CHECK(powerful_exponent(5) == 5);
    CHECK(powerful_exponent(2) == 4);
  }

  TEST_CASE("powerful as subgroup vs powerfully embedded") {
    GroupPtr g = dihedral(16);
    Subgroup rotations_sq = subgroup_closure(g, {2});  // <r^2>, cyclic of 4
    CHECK(rotations_sq.order() == 4);
    // Abelian, so powerful as a group in its own right...
    CHECK(is_powerful_subgroup(rotations_sq, 2));
    // ...but [<r^2>, G] = <r^4> is not inside <r^2>^4 = 1.
    CHECK_FALSE(is_powerfully_embedded(rotations_sq, 2));
    auto w = powerfully_embedded_witness(rotations_sq, 2);
    REQUIRE(w.has_value());
    CHECK(rotations_sq.contains(w->first));
    Subgroup fourth = power_subgroup(rotations_sq, 4);
    CHECK_FALSE(fourth.contains(g->comm(w->first, w->second)));
  }

  TEST_CASE("central subgroups are powerfully embedded") {
    GroupPtr g = dihedral(16);
    Subgroup z = center(g);
    CHECK(z.order() == 2);
    CHECK(is_powerfully_embedded(z, 2));
    CHECK_FALSE(powerfully_embedded_witness(z, 2).has_value());

    GroupPtr e = extraspecial_exp_p2(3);
    CHECK(is_powerfully_embedded(commutator_subgroup(full_subgroup(e),
                                                     full_subgroup(e)),
                                 3));
  }

  TEST_CASE("whole group embedded iff powerful") {
    CHECK(is_powerfully_embedded(full_subgroup(extraspecial_exp_p2(3)), 3));
    CHECK_FALSE(is_powerfully_embedded(full_subgroup(dihedral(8)), 2));
  }

  TEST_CASE("embedding test requires a normal subgroup") {
    GroupPtr g = dihedral(8);
    Subgroup refl = subgroup_closure(g, {4});  // <s>, not normal
    CHECK_THROWS_AS(is_powerfully_embedded(refl, 2), InputError);
  }

  TEST_CASE("check record semantics") {
    TheoremCheck c{"demo", "g", 1};
    c.hypothesis_holds = true;
    c.conclusion_holds = false;
    CHECK(c.is_violation());
    CHECK_FALSE(c.is_substantive_pass());
    c.conclusion_holds = true;
    CHECK(c.is_substantive_pass());
    c.hypothesis_holds = false;
    CHECK_FALSE(c.is_substantive_pass());
    CHECK_FALSE(c.is_violation());
  }
}

TEST_SUITE("quotient-powerful theorems") {
  TEST_CASE("lower central term embeds once the quotient is powerful") {
    // D8/Z is elementary abelian, so the n=2 instance is substantive.
    TheoremCheck c = check_theorem_A_i(dihedral(8), 2, 2);
    CHECK(c.theorem_id == "A_i");
    CHECK(c.parameter_n == 2);
    CHECK(c.is_substantive_pass());

    // D8 itself is not powerful: n=1 hypothesis fails, record is kept.
    TheoremCheck v = check_theorem_A_i(dihedral(8), 2, 1);
    CHECK_FALSE(v.hypothesis_holds);
    CHECK_FALSE(v.is_violation());

    CHECK(check_theorem_A_i(quaternion8(), 2, 2).is_substantive_pass());
    CHECK(check_theorem_A_i(heisenberg(3), 3, 2).is_substantive_pass());
    CHECK(check_theorem_A_i(extraspecial_exp_p2(3), 3, 1).is_substantive_pass());
    CHECK(check_theorem_A_i(cyclic(27), 3, 1).is_substantive_pass());

    // D16/Z_1 is dihedral of order 8: vacuous at n=2, substantive at n=3.
    CHECK_FALSE(check_theorem_A_i(dihedral(16), 2, 2).hypothesis_holds);
    CHECK(check_theorem_A_i(dihedral(16), 2, 3).is_substantive_pass());
    CHECK_FALSE(check_theorem_A_i(semidihedral16(), 2, 2).hypothesis_holds);
    CHECK(check_theorem_A_i(semidihedral16(), 2, 3).is_substantive_pass());
  }

  TEST_CASE("lower p-series variant keeps the parity split") {
    TheoremCheck odd = check_theorem_A_ii(heisenberg(3), 3, 2);
    CHECK(odd.theorem_id == "A_ii");
    CHECK(odd.is_substantive_pass());
    CHECK(odd.note.empty());

    CHECK(check_theorem_A_ii(extraspecial_exp_p2(3), 3, 2).is_substantive_pass());

    // p = 2 concludes "lambda_n is powerful", not "powerfully embedded".
    TheoremCheck even = check_theorem_A_ii(dihedral(8), 2, 2);
    CHECK(even.is_substantive_pass());
    CHECK(even.note.find("p=2") != std::string::npos);
    CHECK(check_theorem_A_ii(quaternion8(), 2, 2).is_substantive_pass());
  }

  TEST_CASE("derived term variant over the centralizer sweep") {
    TheoremCheck c = check_theorem_A_iii(heisenberg(3), 3, 2);
    CHECK(c.theorem_id == "A_iii");
    CHECK(c.is_substantive_pass());
    CHECK(check_theorem_A_iii(extraspecial_exp_p2(3), 3, 2).is_substantive_pass());

    CHECK_THROWS_AS(check_theorem_A_iii(dihedral(8), 2, 2), InputError);
    CHECK_THROWS_AS(check_theorem_A_iii(heisenberg(3), 3, 1), InputError);
  }

  TEST_CASE("powerful quotient by central N") {
    GroupPtr h = heisenberg(3);
    TheoremCheck c = check_theorem_B_i(h, center(h), 3, 1);
    CHECK(c.theorem_id == "B_i");
    CHECK(c.is_substantive_pass());
    CHECK(c.note.find("contained") != std::string::npos);
    CHECK(c.note.find("quotient powerful") != std::string::npos);

    // Trivial N: containment holds but H/1 = H is not powerful.
    TheoremCheck vac = check_theorem_B_i(h, trivial_subgroup(h), 3, 1);
    CHECK_FALSE(vac.hypothesis_holds);
    CHECK(vac.note.find("quotient not powerful") != std::string::npos);

    // N = G is not inside Z_1 for the extraspecial group.
    GroupPtr e = extraspecial_exp_p2(3);
    TheoremCheck out = check_theorem_B_i(e, full_subgroup(e), 3, 1);
    CHECK_FALSE(out.hypothesis_holds);
    CHECK(out.note.find("not contained") != std::string::npos);

    CHECK(check_theorem_B_i(e, center(e), 3, 1).is_substantive_pass());
  }

  TEST_CASE("powerful quotient by N below the sweep term") {
    GroupPtr h = heisenberg(3);
    TheoremCheck c = check_theorem_B_ii(h, center(h), 3, 1);
    CHECK(c.theorem_id == "B_ii");
    CHECK(c.is_substantive_pass());
  }

  TEST_CASE("theorem B input guards") {
    GroupPtr d = dihedral(8);
    CHECK_THROWS_AS(check_theorem_B_i(d, center(d), 2, 1), InputError);
    GroupPtr h = heisenberg(3);
    Subgroup non_normal = subgroup_closure(h, {9});
    CHECK_THROWS_AS(check_theorem_B_i(h, non_normal, 3, 1), InputError);
    CHECK_THROWS_AS(check_theorem_B_ii(h, center(h), 3, 0), InputError);
  }

  TEST_CASE("exponent-p subgroup below the Frattini sweep") {
    GroupPtr h = heisenberg(3);
    auto both = check_frattini_theorem(h, full_subgroup(h), 3, 2);
    REQUIRE(both.size() == 2);
    CHECK(both[0].theorem_id == "frattini_i");
    CHECK(both[1].theorem_id == "frattini_ii");
    CHECK(both[0].is_substantive_pass());
    CHECK(both[0].note == "Psi_{n+1} order 1");
    CHECK(both[1].is_substantive_pass());

    auto central = check_frattini_theorem(h, center(h), 3, 1);
    CHECK(central[0].is_substantive_pass());
    CHECK(central[1].is_substantive_pass());
  }

  TEST_CASE("Frattini-sweep theorem for p=2 keeps part two vacuous") {
    GroupPtr d = dihedral(8);
    auto both = check_frattini_theorem(d, center(d), 2, 1);
    REQUIRE(both.size() == 2);
    CHECK(both[0].is_substantive_pass());
    CHECK_FALSE(both[1].hypothesis_holds);
    CHECK(both[1].note.find("skipped for p=2") != std::string::npos);
  }

  TEST_CASE("Frattini-sweep theorem hypothesis failures") {
    GroupPtr d = dihedral(8);
    // <r> is normal of exponent 4: the exponent-p premise fails.
    Subgroup rot = subgroup_closure(d, {1});
    auto both = check_frattini_theorem(d, rot, 2, 1);
    CHECK_FALSE(both[0].hypothesis_holds);
    CHECK_FALSE(both[0].is_violation());

    Subgroup refl = subgroup_closure(d, {4});
    CHECK_THROWS_AS(check_frattini_theorem(d, refl, 2, 1), InputError);
  }
}

TEST_SUITE("powerful structure suites") {
  TEST_CASE("series and power terms of a powerful cyclic group") {
    auto checks = check_lubotzky_mann_suite(cyclic(27), 3);
    CHECK(checks.size() == 13);
    CHECK(all_substantive(checks));
    CHECK(count_id(checks, "LM_gamma_embedded") == 2);
    CHECK(count_id(checks, "LM_upper_central_embedded") == 1);
    CHECK(count_id(checks, "LM_lambda_embedded") == 4);
    CHECK(count_id(checks, "LM_power_embedded") == 3);
    CHECK(count_id(checks, "LM_power_surjective") == 3);
  }

  TEST_CASE("power maps of the nonabelian powerful group are surjective") {
    auto checks = check_lubotzky_mann_suite(extraspecial_exp_p2(3), 3);
    CHECK(all_substantive(checks));
    CHECK(count_id(checks, "LM_power_surjective") == 2);
  }

  TEST_CASE("suite rejects non-powerful input") {
    CHECK_THROWS_AS(check_lubotzky_mann_suite(dihedral(8), 2), InputError);
    CHECK_THROWS_AS(check_lubotzky_mann_suite(heisenberg(3), 3), InputError);
  }

  TEST_CASE("embedded family contents") {
    auto fam27 = powerfully_embedded_family(extraspecial_exp_p2(3), 3);
    CHECK(fam27.size() == 3);  // 1, <a^3> = centre = derived = G^3, G

    auto fam16 = powerfully_embedded_family(cyclic(16), 2);
    CHECK(fam16.size() == 5);

    // D8 is not powerful, so the full group drops out of its own family.
    auto fam8 = powerfully_embedded_family(dihedral(8), 2);
    CHECK(fam8.size() == 2);
    for (const auto& s : fam8) CHECK(s.order() <= 2);
  }

  TEST_CASE("power-commutator identity across the family") {
    auto checks = check_shalev_identity(extraspecial_exp_p2(3), 3);
    // 3x3 family pairs, 10 exponent pairs with i+j <= 3 each.
    CHECK(checks.size() == 90);
    CHECK(no_violations(checks));
    CHECK(all_substantive(checks));
    bool saw_mixed = false;
    for (const auto& c : checks) saw_mixed |= (c.parameter_n == 12);
    CHECK(saw_mixed);

    CHECK(no_violations(check_shalev_identity(cyclic(27), 3)));
    CHECK(no_violations(check_shalev_identity(dihedral(8), 2)));
  }

  TEST_CASE("closure operations stay powerfully embedded") {
    auto checks = check_embedding_closure(extraspecial_exp_p2(3), 3);
    CHECK(checks.size() == 36);
    CHECK(no_violations(checks));
    CHECK(count_id(checks, "LM_product_embedded") == 9);
    CHECK(count_id(checks, "LM_commutator_embedded") == 9);
    CHECK(count_id(checks, "LM_ng_embedded") == 9);
    CHECK(count_id(checks, "LM_npower_embedded") == 9);

    CHECK(no_violations(check_embedding_closure(cyclic(16), 2)));
    CHECK(no_violations(check_embedding_closure(heisenberg(3), 3)));
  }
}

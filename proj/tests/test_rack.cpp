#include <doctest.h>
#include <numeric>

#include "rackhopf/errors.hpp"
#include "rackhopf/rack.hpp"

using namespace rackhopf;

TEST_CASE("permutation basics") {
  const Perm a = parse_cycles("(123)", 4), b = parse_cycles("(12)", 4);
  CHECK(compose(a, b) == Perm{2, 1, 0, 3});  // a(b(i))
  CHECK(compose(a, inverse(a)) == identity_perm(4));
  CHECK(conjugate(b, a) == compose(compose(b, a), inverse(b)));
  CHECK(sign(b) == -1);
  CHECK(sign(a) == 1);
  CHECK(order(parse_cycles("(12)(34)", 4)) == 2);
  CHECK(order(parse_cycles("(1234)", 4)) == 4);
  CHECK(cycle_string(parse_cycles("(13)(24)", 4)) == "(13)(24)");
  CHECK(cycle_string(identity_perm(3)) == "()");
  CHECK_THROWS_AS(parse_cycles("(15)", 4), InvalidInput);
}

TEST_CASE("symmetric group closure") {
  CHECK(PermGroup::symmetric(3).order() == 6);
  CHECK(PermGroup::symmetric(4).order() == 24);
  const auto g = PermGroup::generate(4, {parse_cycles("(1234)", 4)});
  CHECK(g.order() == 4);
  CHECK_THROWS_AS(PermGroup::generate(5, {parse_cycles("(12345)", 5), parse_cycles("(12)", 5)}, 50),
                  ClosureBudgetExceeded);
  CHECK(FiniteGroup::symmetric(4).check_axioms());
  CHECK_THROWS_AS(conjugacy_class(PermGroup::generate(4, {parse_cycles("(1234)", 4)}), parse_cycles("(12)", 4)),
                  SeedNotInGroup);
}

TEST_CASE("validate_rack examples") {
  SUBCASE("one element") {
    Rack r = validate_rack(1, {{0}});
    CHECK(r.is_quandle());
  }
  SUBCASE("transpositions of S3 conjugate correctly") {
    std::vector<Perm> perms;
    Rack r = conjugacy_rack(PermGroup::symmetric(3), parse_cycles("(12)", 3), &perms);
    CHECK(r.is_quandle());
    CHECK(r.label(r.op(r.find("(12)"), r.find("(13)"))) == "(23)");
    // revalidating the table succeeds
    CHECK_NOTHROW(validate_rack(3, r.table(), r.labels()));
  }
  SUBCASE("constant row is not bijective") {
    try {
      validate_rack(2, {{1, 1}, {0, 0}});
      FAIL("expected NotBijective");
    } catch (const NotBijective& e) {
      CHECK(e.row == 0);
    }
  }
  SUBCASE("self-distributivity failure is reported") {
    // rows are bijections but x ▷ (y ▷ z) differs from (x ▷ y) ▷ (x ▷ z)
    CHECK_THROWS_AS(validate_rack(3, {{1, 2, 0}, {0, 1, 2}, {0, 1, 2}}), NotSelfDistributive);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(validate_rack(2, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(validate_rack(2, {{0, 1}, {0, 2}}), InvalidInput);
  }
}

TEST_CASE("conjugacy racks of S4 and S3") {
  CHECK(transposition_rack(4).size() == 6);
  CHECK(four_cycle_rack().size() == 6);
  CHECK(transposition_rack(3).size() == 3);
  CHECK(transposition_rack(4).labels() == std::vector<std::string>{"(34)", "(23)", "(24)", "(12)", "(13)", "(14)"});
  CHECK(four_cycle_rack().labels() ==
        std::vector<std::string>{"(1234)", "(1243)", "(1342)", "(1324)", "(1432)", "(1423)"});
}

TEST_CASE("rack properties") {
  for (const Rack& r : {transposition_rack(4), four_cycle_rack()}) {
    RackProperties p = rack_properties(r);
    CHECK(p.faithful);
    CHECK(p.indecomposable);
    CHECK(p.quandle);
  }
  RackProperties t = rack_properties(trivial_rack(2));
  CHECK_FALSE(t.faithful);
  CHECK_FALSE(t.indecomposable);
  CHECK(t.quandle);
  CHECK(rack_properties(dihedral_quandle(3)).indecomposable);
  CHECK_FALSE(rack_properties(dihedral_quandle(4)).indecomposable);
  CHECK_FALSE(permutation_rack(parse_cycles("(12)", 3)).is_quandle());
}

TEST_CASE("inner group orders") {
  CHECK(inner_group(transposition_rack(3)).group.order() == 6);
  CHECK(inner_group(transposition_rack(4)).group.order() == 24);
  CHECK(inner_group(trivial_rack(4)).group.order() == 1);
  CHECK_FALSE(inner_group(four_cycle_rack()).violation.has_value());
}

TEST_CASE("enveloping relation") {
  std::vector<Perm> perms;
  Rack r = transposition_rack(4, &perms);
  CHECK(check_enveloping_map(r, PermGroup::symmetric(4), perms));
  InnerGroup inner = inner_group(r);
  std::vector<Perm> phis;
  for (int x = 0; x < r.size(); ++x) phis.push_back(r.phi(x));
  CHECK(check_enveloping_map(r, inner.group, phis));
  // a constant map always satisfies the relation (both sides are c^2)
  std::vector<Perm> constant(r.size(), parse_cycles("(12)", 4));
  CHECK(check_enveloping_map(r, PermGroup::symmetric(4), constant));
  std::vector<Perm> moved = perms;
  moved[r.find("(12)")] = parse_cycles("(13)", 4);
  CHECK_FALSE(check_enveloping_map(r, PermGroup::symmetric(4), moved));
  CHECK_FALSE(check_enveloping_map(r, PermGroup::generate(4, {parse_cycles("(1234)", 4)}), perms));
}

TEST_CASE("property: a conjugation rack is indecomposable iff the class stays one class in the group it generates") {
  const PermGroup s5 = PermGroup::symmetric(5);
  for (std::string seed : {"(12)", "(123)", "(12)(34)", "(1234)", "(12345)", "(123)(45)"}) {
    std::vector<Perm> perms;
    Rack r = conjugacy_rack(s5, parse_cycles(seed, 5), &perms);
    CAPTURE(seed);
    CHECK(r.is_quandle());
    CHECK(check_enveloping_map(r, s5, perms));
    const PermGroup generated = PermGroup::generate(5, perms);
    const bool single_class = conjugacy_class(generated, perms.front()).size() == perms.size();
    CHECK(rack_properties(r).indecomposable == single_class);
  }
  // 5-cycles split into two classes of A5
  CHECK_FALSE(rack_properties(conjugacy_rack(s5, parse_cycles("(12345)", 5))).indecomposable);
  for (int m = 3; m <= 9; ++m) {
    for (int a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CHECK_NOTHROW(alexander_quandle(m, a));
    }
  }
}

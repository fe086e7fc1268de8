#include <doctest.h>

#include "rackhopf/errors.hpp"
#include "rackhopf/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace rackhopf;

namespace {

std::vector<Rational> by_label(const Rack& r, std::initializer_list<std::pair<const char*, Rational>> values) {
  std::vector<Rational> v(r.size());
  for (const auto& [label, x] : values) v[r.find(label)] = x;
  return v;
}

}  // namespace

TEST_CASE("g_C never equals a transposition for the S4 data") {
  for (const char* name : {"o24-sgn", "o24-chi", "o44-sgn"}) {
    PrincipalRealization r = named_realization(name);
    CHECK(condition_offenders(r, realization_cocycle(r)).empty());
  }
  PrincipalRealization r = named_realization("o24-sgn");
  PointedLifting l = pointed_lifting_generators(r, realization_cocycle(r), std::vector<Rational>(17));
  for (const auto& g : l.generators) {
    const Perm& p = r.group.element(g.g_C);
    CHECK(sign(p) == 1);  // identity, 3-cycle or double transposition
  }
}

TEST_CASE("pointed lifting generators") {
  PrincipalRealization r = named_realization("o24-sgn");
  Cocycle2 q = realization_cocycle(r);
  ParamSpace space = pointed_lambda_space(q);

  PointedLifting zero = pointed_lifting_generators(r, q, std::vector<Rational>(17));
  REQUIRE(zero.generators.size() == 17);
  for (const auto& g : zero.generators) CHECK(g.lambda == 0);

  std::vector<Rational> by_size;
  for (const auto& c : space.classes()) by_size.push_back(c.size());
  PointedLifting l = pointed_lifting_generators(r, q, by_size);
  for (const auto& g : l.generators) {
    CHECK(g.lambda == static_cast<int>(l.classes[g.cls].size()));
    CHECK(g.b.is_homogeneous());
    CHECK(g.b.degree() == 2);
    // g_C = g_{i2} g_{i1} for the first pair (i2, i1)
    auto [i2, i1] = l.classes[g.cls].pair(0);
    CHECK(g.g_C == r.group.mul(r.g[i2], r.g[i1]));
  }

  std::vector<Rational> bad = space.expand({1, 2, 3});
  bad[0] = 7;
  CHECK_THROWS_AS(pointed_lifting_generators(r, q, bad), InvalidInput);
  CHECK_THROWS_AS(pointed_lifting_generators(r, q, {1, 2}), IndexMismatch);
}

TEST_CASE("condition violation is an assertion failure") {
  // trivial rack on two points in C2 with g_0 = (12), g_1 = e: the class {(0,0)} has g_C = e = g_1
  FiniteGroup c2(PermGroup::generate(2, {parse_cycles("(12)", 2)}));
  const int e = c2.identity(), s = c2.index_of(parse_cycles("(12)", 2));
  std::vector<std::vector<int>> action(2, std::vector<int>{0, 1});
  std::vector<std::vector<Rational>> chi(2, std::vector<Rational>(2, 1));
  chi[0][s] = chi[1][s] = -1;
  PrincipalRealization r = make_realization(c2, trivial_rack(2), action, {s, e}, chi);
  Cocycle2 q = realization_cocycle(r);
  CHECK_FALSE(condition_offenders(r, q).empty());
  CHECK_THROWS_AS(pointed_lifting_generators(r, q, {0}), ConditionViolated);
}

TEST_CASE("copointed liftings with zero lambda are the Nichols relations") {
  for (CopointedFamily f : {CopointedFamily::TranspMinus, CopointedFamily::TranspChi, CopointedFamily::FourCycles}) {
    CopointedLifting l = copointed_lifting_generators({f, std::vector<Rational>(6)});
    CHECK(!l.fixed.empty());
    for (const auto& d : l.deformed)
      for (const auto& v : d.f) CHECK(v == 0);
  }
}

TEST_CASE("copointed lifting for transpositions") {
  std::vector<Perm> perms;
  Rack r = transposition_rack(4, &perms);
  CopointedLifting l =
      copointed_lifting_generators({CopointedFamily::TranspMinus, by_label(r, {{"(12)", 1}, {"(13)", -1}})});
  const int t12 = r.find("(12)");
  const DeformedRelation* rel = nullptr;
  for (const auto& d : l.deformed)
    if (d.element == t12) rel = &d;
  REQUIRE(rel != nullptr);
  CHECK(rel->f[l.group.identity()] == 0);
  std::set<Rational> values(rel->f.begin(), rel->f.end());
  CHECK(values == std::set<Rational>{0, 1, 2});
  for (int g = 0; g < l.group.size(); ++g) {
    const Perm moved = conjugate(inverse(l.group.element(g)), perms[t12]);
    const int y = static_cast<int>(std::find(perms.begin(), perms.end(), moved) - perms.begin());
    CHECK(rel->f[g] == 1 - (y == t12 ? 1 : y == r.find("(13)") ? -1 : 0));
  }
  for (const auto& d : l.deformed) CHECK(d.f[l.group.identity()] == 0);

  CHECK_THROWS_AS(copointed_lifting_generators({CopointedFamily::TranspMinus, by_label(r, {{"(12)", 1}})}),
                  NormalizationViolated);
}

TEST_CASE("copointed lifting for four-cycles respects inverses") {
  std::vector<Perm> perms;
  Rack r = four_cycle_rack(&perms);
  auto lambda = by_label(r, {{"(1234)", 1}, {"(1432)", 1}, {"(1243)", -1}, {"(1342)", -1}});
  CopointedLifting l = copointed_lifting_generators({CopointedFamily::FourCycles, lambda});
  // one deformed relation per inverse pair; f_x = f_{x^{-1}} pointwise
  CHECK(l.deformed.size() == 3);
  auto index_of = [&](const Perm& p) { return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin()); };
  for (const auto& d : l.deformed) {
    const int x = d.element, xi = index_of(inverse(perms[x]));
    for (int g = 0; g < l.group.size(); ++g) {
      const Perm& h = l.group.element(g);
      const Rational fx = lambda[x] - lambda[index_of(conjugate(inverse(h), perms[x]))];
      const Rational fxi = lambda[xi] - lambda[index_of(conjugate(inverse(h), perms[xi]))];
      CHECK(d.f[g] == fx);
      CHECK(fx == fxi);
    }
  }
  auto unequal = by_label(r, {{"(1234)", 2}, {"(1432)", 1}, {"(1243)", -3}});
  CHECK_THROWS_AS(copointed_lifting_generators({CopointedFamily::FourCycles, unequal}), NormalizationViolated);
  CHECK_THROWS_AS(copointed_lifting_generators({CopointedFamily::FourCycles, {1, 2}}), InvalidInput);
}

TEST_CASE("family names") {
  CHECK(parse_copointed_family("TranspChi") == CopointedFamily::TranspChi);
  CHECK_THROWS_AS(parse_copointed_family("x"), InvalidInput);
}

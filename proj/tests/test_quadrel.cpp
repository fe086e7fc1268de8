#include <doctest.h>

#include <algorithm>

#include "random_objects.hpp"
#include "rackhopf/braided.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/matrix.hpp"
#include "rackhopf/quadrel.hpp"

using namespace rackhopf;

namespace {

std::vector<int> sorted_sizes(const std::vector<RelClass>& classes) {
  std::vector<int> s;
  for (const auto& c : classes) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("class enumeration") {
  CHECK(sorted_sizes(enumerate_classes(transposition_rack(3))) == std::vector<int>{1, 1, 1, 3, 3});
  const std::vector<int> s4{1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3};
  CHECK(sorted_sizes(enumerate_classes(transposition_rack(4))) == s4);
  CHECK(sorted_sizes(enumerate_classes(four_cycle_rack())) == s4);
}

TEST_CASE("property: classes partition X x X and are closed under (i,j) -> (i▷j, i)") {
  std::mt19937_64 e(17);
  for (int trial = 0; trial < 20; ++trial) {
    Rack r = testing_support::random_small_rack(e);
    const int n = r.size();
    auto classes = enumerate_classes(r);
    ClassLocator loc = locate_classes(classes, n);
    std::vector<int> seen(n * n, 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int h = 0; h < classes[c].size(); ++h) {
        auto [a, b] = classes[c].pair(h);
        ++seen[a * n + b];
        CHECK(loc.locate(a, b) == std::pair<int, int>{static_cast<int>(c), h});
        auto [a2, b2] = classes[c].pair(h + 1);
        CHECK(a2 == r.op(a, b));
        CHECK(b2 == a);
      }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
}

TEST_CASE("R' selection") {
  Rack r4 = transposition_rack(4);
  CHECK(select_Rprime(enumerate_classes(r4), constant_cocycle(r4, -1)).size() == 17);
  CHECK(select_Rprime(enumerate_classes(r4), chi_cocycle(r4, 4)).size() == 17);
  Rack r3 = transposition_rack(3);
  auto plus = select_Rprime(enumerate_classes(r3), constant_cocycle(r3, 1));
  for (const auto& c : plus) CHECK(c.size() % 2 == 0);
  CHECK(plus.empty());
}

TEST_CASE("relation polynomials") {
  Rack r3 = transposition_rack(3);
  Cocycle2 q = constant_cocycle(r3, -1);
  auto classes = select_Rprime(enumerate_classes(r3), q);
  const int t12 = r3.find("(12)"), t13 = r3.find("(13)"), t23 = r3.find("(23)");
  auto gen = [&](int a, int b) { return FreePoly::monomial(3, make_word({a, b})); };
  bool found_square = false, found_cycle = false;
  for (const auto& c : classes) {
    FreePoly b = relation_poly(c, Flavor::V, 3);
    if (c.size() == 1) found_square = found_square || b == gen(c.seq[0], c.seq[0]);
    FreePoly expected = gen(t12, t13) + gen(t23, t12) + gen(t13, t23);
    if (b == expected || b == -expected) found_cycle = true;
  }
  CHECK(found_square);
  CHECK(found_cycle);

  Rack r44 = four_cycle_rack();
  Cocycle2 q44 = constant_cocycle(r44, -1);
  const int s = r44.find("(1234)"), si = r44.find("(1432)");
  bool found_pair = false;
  for (const auto& c : select_Rprime(enumerate_classes(r44), q44)) {
    if (c.size() != 2) continue;
    FreePoly b = relation_poly(c, Flavor::V, 6);
    FreePoly expected = FreePoly::monomial(6, make_word({s, si})) + FreePoly::monomial(6, make_word({si, s}));
    found_pair = found_pair || b == expected || b == -expected;
  }
  CHECK(found_pair);

  auto all = enumerate_classes(r3);
  auto it = std::find_if(all.begin(), all.end(), [](const RelClass& c) { return c.size() == 1; });
  REQUIRE(it != all.end());
  CHECK_THROWS_AS(relation_poly(annotate_classes({*it}, constant_cocycle(r3, 1))[0], Flavor::V, 3), NotInRprime);
}

TEST_CASE("relations span ker(id + c) for the S4 families in both flavors") {
  Rack r4 = transposition_rack(4), r44 = four_cycle_rack();
  for (const Cocycle2& q : {constant_cocycle(r4, -1), chi_cocycle(r4, 4), constant_cocycle(r44, -1)})
    for (Flavor f : {Flavor::V, Flavor::W}) {
      J2Report j = verify_J2_report(q, f);
      CHECK(j.equal);
      CHECK(j.kernel_dim == 17);
      CHECK(j.relation_rank == 17);
    }
  CHECK(verify_J2_report(constant_cocycle(transposition_rack(3), -1), Flavor::V).kernel_dim == 5);
}

TEST_CASE("property: relations lie in ker(id + c) for random data") {
  std::mt19937_64 e(4242);
  for (int trial = 0; trial < 25; ++trial) {
    Rack r = testing_support::random_small_rack(e);
    Cocycle2 q = testing_support::random_cocycle(r, e);
    const int n = r.size();
    for (Flavor f : {Flavor::V, Flavor::W}) {
      RatMatrix s2 = RatMatrix::identity(n * n) + braiding_matrix(make_braiding(q, f));
      for (const auto& c : select_Rprime(enumerate_classes(r), q)) {
        RatVector v = quadratic_coordinates(relation_poly(c, f, n), n);
        for (std::size_t row = 0; row < s2.rows(); ++row) {
          Rational acc = 0;
          for (const auto& [col, x] : s2.row(row)) acc += x * v[col];
          CHECK(is_zero(acc));
        }
      }
    }
  }
}

TEST_CASE("pointed parameter spaces") {
  Rack r4 = transposition_rack(4);
  ParamSpace minus = pointed_lambda_space(constant_cocycle(r4, -1));
  CHECK(minus.free_dim() == 3);
  // one parameter per class size
  for (std::size_t a = 0; a < minus.size(); ++a)
    for (std::size_t b = 0; b < minus.size(); ++b) {
      auto [ra, xa] = minus.resolve(static_cast<int>(a));
      auto [rb, xb] = minus.resolve(static_cast<int>(b));
      CHECK((ra == rb) == (minus.classes()[a].size() == minus.classes()[b].size()));
      if (ra == rb) CHECK(xa == xb);
    }
  ParamSpace chi = pointed_lambda_space(chi_cocycle(r4, 4));
  CHECK(chi.free_dim() == 2);
  for (std::size_t a = 0; a < chi.size(); ++a)
    CHECK(chi.is_zero(static_cast<int>(a)) == (chi.classes()[a].size() == 2));
  CHECK(pointed_lambda_space(constant_cocycle(four_cycle_rack(), -1)).free_dim() == 3);

  std::vector<Rational> lambda = minus.expand({1, 2, 3});
  CHECK(minus.admits(lambda));
  lambda[0] += 1;
  CHECK_FALSE(minus.admits(lambda));
}

TEST_CASE("copointed parameter spaces") {
  Rack r4 = transposition_rack(4), r44 = four_cycle_rack();
  for (const Cocycle2& q : {constant_cocycle(r4, -1), chi_cocycle(r4, 4)}) {
    ParamSpace s = copointed_lambda_space(q);
    CHECK(s.free_dim() == 6);
    for (std::size_t a = 0; a < s.size(); ++a)
      CHECK(s.is_zero(static_cast<int>(a)) == (s.classes()[a].size() != 1));
  }
  ParamSpace s = copointed_lambda_space(constant_cocycle(r44, -1));
  CHECK(s.free_dim() == 3);
  for (std::size_t a = 0; a < s.size(); ++a) CHECK(s.is_zero(static_cast<int>(a)) == (s.classes()[a].size() != 2));
}

TEST_CASE("Hom vanishing for the S4 families") {
  Rack r4 = transposition_rack(4);
  CHECK(hom_vanishing_check(constant_cocycle(r4, -1)).all);
  CHECK(hom_vanishing_check(chi_cocycle(r4, 4)).all);
  CHECK(hom_vanishing_check(constant_cocycle(four_cycle_rack(), -1)).all);
}

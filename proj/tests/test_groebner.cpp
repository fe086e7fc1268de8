#include <doctest.h>

#include <random>

#include "rackhopf/deform.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/groebner.hpp"

using namespace rackhopf;

namespace {

FreePoly w(int alphabet, std::initializer_list<int> letters, Rational c = 1) {
  return FreePoly::monomial(alphabet, make_word(letters), c);
}

// x < y
const FreePoly X2 = w(2, {0, 0}), Y2 = w(2, {1, 1}), XY = w(2, {0, 1}), YX = w(2, {1, 0});

FreePoly relabel(const FreePoly& p, const std::vector<int>& sigma) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Word word = t.word;
    for (auto& ch : word) ch = static_cast<char>(sigma[static_cast<unsigned char>(ch)]);
    terms.push_back({word, t.coeff});
  }
  return FreePoly(p.alphabet(), terms);
}

}  // namespace

TEST_CASE("free algebra arithmetic") {
  FreePoly p = XY + YX * Rational(3) - FreePoly::constant(2, 1);
  CHECK(p.leading_word() == make_word({1, 0}));
  CHECK(p.leading_coeff() == 3);
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK((FreePoly::generator(2, 0) * FreePoly::generator(2, 1)) == XY);
  CHECK(p.to_string({"x", "y"}) == "3*y*x + x*y - 1");
  CHECK(p.monic().leading_coeff() == 1);
  CHECK(deglex_less(make_word({1}), make_word({0, 0})));
  CHECK(deglex_less(make_word({0, 1}), make_word({1, 0})));
}

TEST_CASE("normal form examples") {
  GroebnerBasis gx = groebner({w(1, {0, 0})}, 1);
  CHECK(normal_form(w(1, {0, 0}), gx).is_zero());
  GroebnerBasis g = groebner({XY + YX}, 2);
  CHECK(normal_form(YX, g) == -XY);
  CHECK(normal_form(FreePoly::constant(2, 1), g) == FreePoly::constant(2, 1));
}

TEST_CASE("exterior algebra on two generators") {
  GroebnerBasis g = groebner({X2, Y2, XY + YX}, 2);
  CHECK(g.complete());
  CHECK(g.elements().size() == 3);
  QuotientDim d = quotient_dim(g);
  CHECK(d.kind == QuotientDim::Kind::Finite);
  CHECK(d.value == 4);
  CHECK(normal_words(g) == std::vector<Word>{Word(), make_word({0}), make_word({1}), make_word({0, 1})});
  CHECK(hilbert_series(g, 3) == std::vector<std::uint64_t>{1, 2, 1, 0});
}

TEST_CASE("quotient dimension edge cases") {
  CHECK(quotient_dim(groebner({w(1, {0, 0})}, 1)).value == 2);
  CHECK(quotient_dim(groebner({}, 1)).kind == QuotientDim::Kind::Infinite);
  CHECK(hilbert_series(groebner({}, 2), 4) == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
}

TEST_CASE("trivial ideals") {
  const FreePoly x = FreePoly::generator(1, 0), one = FreePoly::constant(1, 1);
  CHECK(is_trivial_quotient(groebner({x - one, x}, 1)).trivial);
  CHECK(is_trivial_quotient(groebner({w(1, {0, 0}) - one, w(1, {0, 0}) + one}, 1)).trivial);
  CHECK_FALSE(is_trivial_quotient(groebner({w(1, {0, 0}) - one}, 1)).trivial);
}

TEST_CASE("truncation and budgets") {
  // xyx - yxy style relation with an infinite completion in deglex
  GroebnerBasis g = groebner({w(2, {0, 1, 0}) - w(2, {1, 0, 1})}, 2, {8, 20'000});
  CHECK_FALSE(g.complete());
  CHECK(quotient_dim(g).kind == QuotientDim::Kind::UnknownTruncated);
  CHECK_THROWS_AS(groebner({w(2, {0, 1, 0}) - w(2, {1, 0, 1})}, 2, {30, 3}), ResourceBudgetExceeded);
}

TEST_CASE("FK3 ideal: dimension 12 and Hilbert series 1,3,4,3,1") {
  DeformedIdeal ideal = nichols_presentation(Family::Eminus, 3);
  GroebnerBasis g = groebner(ideal.generators, 3);
  CHECK(g.complete());
  CHECK(quotient_dim(g).value == 12);
  CHECK(hilbert_series(g, 5) == std::vector<std::uint64_t>{1, 3, 4, 3, 1, 0});
}

TEST_CASE("property: quotient_dim is invariant under permuting the generators") {
  DeformedIdeal ideal = nichols_presentation(Family::Eminus, 3);
  std::mt19937_64 e(31337);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> sigma{0, 1, 2};
    std::shuffle(sigma.begin(), sigma.end(), e);
    std::vector<FreePoly> gens;
    for (const auto& p : ideal.generators) gens.push_back(relabel(p, sigma));
    std::shuffle(gens.begin(), gens.end(), e);
    GroebnerBasis g = groebner(gens, 3);
    CAPTURE(trial);
    CHECK(quotient_dim(g).value == 12);
    CHECK(hilbert_series(g, 4) == std::vector<std::uint64_t>{1, 3, 4, 3, 1});
  }
}

TEST_CASE("property: normal form is idempotent and the S-element audit passes on completed bases") {
  std::mt19937_64 e(8);
  std::vector<GroebnerBasis> bases;
  bases.push_back(groebner(nichols_presentation(Family::Eminus, 3).generators, 3));
  bases.push_back(groebner(nichols_presentation(Family::Eminus, 4).generators, 6));
  bases.push_back(groebner(nichols_presentation(Family::Etilde, 4).generators, 6));
  bases.push_back(groebner(build_deformed_ideal(sample_params(Family::Eminus, 4, SampleKind::Generic, 1, 0)).generators, 6));
  for (const auto& g : bases) {
    REQUIRE(g.complete());
    ObstructionAudit a = audit_obstructions(g);
    CHECK(a.ok());
    CHECK(a.checked > 0);
    const int n = g.alphabet();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Term> terms;
      for (int t = 0; t < 4; ++t) {
        Word word;
        const int len = static_cast<int>(e() % 6);
        for (int i = 0; i < len; ++i) word.push_back(static_cast<char>(e() % n));
        terms.push_back({word, Rational(static_cast<long>(e() % 7) - 3)});
      }
      FreePoly p(n, terms);
      FreePoly once = normal_form(p, g);
      CHECK(normal_form(once, g) == once);
      for (const auto& t : once.terms()) CHECK(g.is_normal_word(t.word));
    }
  }
}

TEST_CASE("serial and parallel batch normal forms agree") {
  GroebnerBasis g = groebner(nichols_presentation(Family::Eminus, 4).generators, 6);
  std::vector<FreePoly> polys;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) polys.push_back(FreePoly::monomial(6, make_word({a, b, c, a})));
  CHECK(batch_normal_form(polys, g, Exec::Serial) == batch_normal_form(polys, g, Exec::Parallel));
  ObstructionAudit s = audit_obstructions(g, Exec::Serial), p = audit_obstructions(g, Exec::Parallel);
  CHECK(s.checked == p.checked);
  CHECK(s.failures == p.failures);
}

TEST_CASE("avoidance automaton") {
  AvoidanceAutomaton a(2, {make_word({0, 0}), make_word({1, 1})});
  CHECK(a.has_live_cycle());  // alternating words
  AvoidanceAutomaton b(2, {make_word({0, 0}), make_word({1, 1}), make_word({1, 0})});
  CHECK_FALSE(b.has_live_cycle());
}

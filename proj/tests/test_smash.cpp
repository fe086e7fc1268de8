#include <doctest.h>

#include "rackhopf/deform.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/smash.hpp"

#include <algorithm>

using namespace rackhopf;

namespace {

SparseVec basis(int i, Rational c = 1) { return {{i, c}}; }

struct Fk3 {
  GroebnerBasis gb;
  std::vector<Word> words;
  FiniteAlgebra algebra;
  std::vector<Perm> perms;
  Rack rack;
};

Fk3 fk3() {
  std::vector<Perm> perms;
  Rack r = transposition_rack(3, &perms);
  DeformedIdeal d = nichols_presentation(Family::Eminus, 3);
  GroebnerBasis gb = groebner(d.generators, 3);
  std::vector<Word> words;
  FiniteAlgebra a = quotient_algebra(gb, d.names, &words);
  return {gb, words, a, perms, r};
}

// h·x_t = sgn(h) x_{h t h^{-1}}
ModuleAlgebraAction fk3_action(const Fk3& f, const FiniteGroup& s3) {
  return letter_action_on_quotient(f.gb, f.words, s3, [&](int h, int l) {
    const Perm& p = s3.element(h);
    const Perm image = conjugate(p, f.perms[l]);
    const int target = static_cast<int>(std::find(f.perms.begin(), f.perms.end(), image) - f.perms.begin());
    return std::pair<int, Rational>{target, sign(p)};
  });
}

}  // namespace

TEST_CASE("exterior algebra") {
  FiniteAlgebra e = exterior_algebra(2);
  CHECK(e.dim() == 4);
  CHECK(e.product(1, 2) == basis(3));
  CHECK(e.product(2, 1) == basis(3, -1));
  CHECK(e.product(1, 1).empty());
  CHECK(associativity_audit(exterior_algebra(4)).ok());
}

TEST_CASE("smash with the ground field is the Hopf algebra itself") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (HopfKind k : {HopfKind::GroupAlgebra, HopfKind::FunctionAlgebra}) {
    HopfAlgebra h(s3, k);
    FiniteAlgebra field = ground_field();
    ModuleAlgebraAction act{h, {}};
    for (int i = 0; i < h.dim(); ++i) {
      const Rational e = h.counit(h.basis(i));
      act.act.push_back({is_zero(e) ? SparseVec{} : basis(0, e)});
    }
    FiniteAlgebra s = smash_product(field, act);
    CHECK(s.dim() == 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        HopfElement m = h.mul(h.basis(i), h.basis(j));
        SparseVec expected;
        for (int t = 0; t < 6; ++t)
          if (!is_zero(m[t])) expected.push_back({t, m[t]});
        CHECK(s.product(i, j) == expected);
      }
  }
}

TEST_CASE("function algebra smash: deltas are orthogonal idempotents") {
  Fk3 f = fk3();
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  std::vector<int> degree;
  for (const auto& w : f.words) {
    Perm p = identity_perm(3);
    for (std::size_t i = 0; i < w.size(); ++i) p = compose(p, f.perms[letter(w, i)]);
    degree.push_back(s3.index_of(p));
  }
  ModuleAlgebraAction act = grading_action(f.algebra, s3, degree);
  CHECK_NOTHROW(check_module_algebra(f.algebra, act));
  FiniteAlgebra s = smash_product(f.algebra, act);
  CHECK(s.dim() == 72);
  // basis index i*|G| + h with i = 0 the unit of A
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) CHECK(s.product(g, h) == (g == h ? basis(g) : SparseVec{}));
  CHECK(associativity_audit(s).ok());
}

TEST_CASE("group algebra smash on the FK3 quotient") {
  Fk3 f = fk3();
  CHECK(f.algebra.dim() == 12);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  ModuleAlgebraAction act = fk3_action(f, s3);
  CHECK_NOTHROW(check_module_algebra(f.algebra, act));
  FiniteAlgebra s = smash_product(f.algebra, act);
  CHECK(s.dim() == 72);
  AssociativityAudit full = associativity_audit(s);
  CHECK(full.ok());
  CHECK(full.triples == 72u * 72u * 72u);
  AssociativityAudit sampled = associativity_audit_sampled(s, 2000, 9);
  CHECK(sampled.ok());
  CHECK(sampled.triples == 2000);
  // (1 ⊗ h)(a ⊗ 1) = (h·a) ⊗ h
  const int x = 1;
  for (int h = 0; h < 6; ++h) {
    SparseVec expected;
    for (const auto& [i, c] : act.act[h][x]) expected.push_back({i * 6 + h, c});
    CHECK(s.product(h, x * 6 + s3.identity()) == expected);
  }
}

TEST_CASE("serial and parallel associativity audits agree") {
  Fk3 f = fk3();
  FiniteAlgebra s = smash_product(f.algebra, fk3_action(f, FiniteGroup::symmetric(3)));
  AssociativityAudit a = associativity_audit(s, Exec::Serial), b = associativity_audit(s, Exec::Parallel);
  CHECK(a.triples == b.triples);
  CHECK(a.failures == b.failures);
  CHECK(a.monomial_fast_path == b.monomial_fast_path);
}

TEST_CASE("a broken product table fails the associativity audit") {
  FiniteAlgebra e = exterior_algebra(2);
  std::vector<SparseVec> table;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table.push_back(e.product(i, j));
  table[1 * 4 + 1] = basis(2);  // e1 e1 = e2: (e1 e1) e1 = -e12 but e1 (e1 e1) = e12
  FiniteAlgebra broken(4, table, e.unit(), e.names());
  AssociativityAudit a = associativity_audit(broken);
  CHECK_FALSE(a.ok());
  CHECK_FALSE(a.witness.empty());
}

TEST_CASE("non-module-algebra actions are rejected") {
  FiniteAlgebra e = exterior_algebra(2);
  const FiniteGroup s2 = FiniteGroup::symmetric(2);
  const int swap = s2.index_of(parse_cycles("(12)", 2));
  // swaps e1 and e2 but fixes e1e2, which should become -e1e2
  auto bad = [&](int h, int i) -> SparseVec {
    if (h != swap || i == 0 || i == 3) return basis(i);
    return basis(3 - i);
  };
  CHECK_THROWS_AS(check_module_algebra(e, group_action(e, s2, bad)), NotModuleAlgebra);
  auto good = [&](int h, int i) -> SparseVec {
    if (h != swap || i == 0) return basis(i);
    if (i == 3) return basis(3, -1);
    return basis(3 - i);
  };
  ModuleAlgebraAction act = group_action(e, s2, good);
  CHECK_NOTHROW(check_module_algebra(e, act));
  CHECK(associativity_audit(smash_product(e, act)).ok());
  // multiplicative, but the non-identity element scales by 2 so (hh)·a != h·(h·a)
  auto scaling = [&](int h, int i) -> SparseVec {
    if (h != swap) return basis(i);
    const int bits = __builtin_popcount(static_cast<unsigned>(i));
    return basis(i, Rational(1 << bits));
  };
  CHECK_THROWS_AS(check_module_algebra(e, group_action(e, s2, scaling)), NotModuleAlgebra);
  CHECK_THROWS_AS(grading_action(e, s2, {0, 0, 0}), InvalidInput);
}

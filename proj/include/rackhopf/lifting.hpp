#pragma once

#include <string>
#include <vector>

#include "rackhopf/deform.hpp"
#include "rackhopf/grouprealize.hpp"

namespace rackhopf {

// ---- pointed liftings: generators b_C − λ_C(1 − g_C) ----

struct PointedGenerator {
  std::size_t cls = 0;  // index into the R' classes
  FreePoly b;           // V-flavour relation b_C
  int g_C = 0;          // g_{i2} g_{i1}, group index
  Rational lambda = 0;
};

struct PointedLifting {
  std::vector<RelClass> classes;
  std::vector<std::string> names;
  std::vector<PointedGenerator> generators;
};

// (class, x) pairs with g_C = g_x.
std::vector<std::pair<int, int>> condition_offenders(const PrincipalRealization& r, const Cocycle2& q);

// Throws InvalidInput when λ is outside pointed_lambda_space(q), ConditionViolated when some g_C
// equals some g_x.
PointedLifting pointed_lifting_generators(const PrincipalRealization& r, const Cocycle2& q,
                                          const std::vector<Rational>& lambda);

// ---- copointed liftings over k^{S_4} ----

enum class CopointedFamily { TranspMinus, TranspChi, FourCycles };
const char* copointed_family_name(CopointedFamily f);
CopointedFamily parse_copointed_family(const std::string& s);

struct CopointedLambda {
  CopointedFamily family = CopointedFamily::TranspMinus;
  std::vector<Rational> lambda;  // one value per rack element, rack order
};

struct DeformedRelation {
  FreePoly lhs;     // relation equals f (a function on S_4, i.e. an element of k^{S_4})
  int element = 0;  // rack element x of f_x^λ
  GroupFunction f;  // f_x^λ(g) = λ_x − λ_{g⁻¹xg}, indexed by S_4 elements
};

struct CopointedLifting {
  CopointedFamily family = CopointedFamily::TranspMinus;
  Rack rack;
  std::vector<Perm> perms;
  FiniteGroup group;
  std::vector<std::string> names;
  std::vector<FreePoly> fixed;  // undeformed quadratic relations
  std::vector<DeformedRelation> deformed;
};

// f_x^λ for every x. Throws NormalizationViolated unless Σλ = 0 (and λ_{σ⁻¹} = λ_σ for 4-cycles).
CopointedLifting copointed_lifting_generators(const CopointedLambda& lambda);

}  // namespace rackhopf

#include "rackhopf/lifting.hpp"

#include <algorithm>

#include "rackhopf/errors.hpp"

namespace rackhopf {

namespace {

int class_degree(const PrincipalRealization& r, const RelClass& c) {
  const int i1 = c.seq[0], i2 = c.seq[1 % c.seq.size()];
  return r.group.mul(r.g[i2], r.g[i1]);
}

}  // namespace

std::vector<std::pair<int, int>> condition_offenders(const PrincipalRealization& r, const Cocycle2& q) {
  if (q.size() != r.rack.size()) throw IndexMismatch("cocycle and realization racks differ in size");
  auto classes = select_Rprime(enumerate_classes(r.rack), q);
  std::vector<std::pair<int, int>> bad;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int gc = class_degree(r, classes[c]);
    for (int x = 0; x < r.rack.size(); ++x)
      if (r.g[x] == gc) bad.push_back({static_cast<int>(c), x});
  }
  return bad;
}

PointedLifting pointed_lifting_generators(const PrincipalRealization& r, const Cocycle2& q,
                                          const std::vector<Rational>& lambda) {
  PointedLifting out;
  out.classes = select_Rprime(enumerate_classes(r.rack), q);
  if (lambda.size() != out.classes.size())
    throw IndexMismatch("expected " + std::to_string(out.classes.size()) + " values of lambda");
  if (!pointed_lambda_space(q).admits(lambda)) throw InvalidInput("lambda is outside the pointed admissible space");
  auto bad = condition_offenders(r, q);
  if (!bad.empty()) throw ConditionViolated(std::move(bad));
  for (const auto& l : r.rack.labels()) out.names.push_back("x" + l);
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    out.generators.push_back({c, relation_poly(out.classes[c], Flavor::V, r.rack.size()),
                              class_degree(r, out.classes[c]), lambda[c]});
  return out;
}

const char* copointed_family_name(CopointedFamily f) {
  switch (f) {
    case CopointedFamily::TranspMinus: return "TranspMinus";
    case CopointedFamily::TranspChi: return "TranspChi";
    case CopointedFamily::FourCycles: return "FourCycles";
  }
  return "";
}

CopointedFamily parse_copointed_family(const std::string& s) {
  if (s == "TranspMinus") return CopointedFamily::TranspMinus;
  if (s == "TranspChi") return CopointedFamily::TranspChi;
  if (s == "FourCycles") return CopointedFamily::FourCycles;
  throw InvalidInput("unknown copointed family '" + s + "' (expected TranspMinus, TranspChi or FourCycles)");
}

CopointedLifting copointed_lifting_generators(const CopointedLambda& cl) {
  CopointedLifting out;
  out.family = cl.family;
  out.group = FiniteGroup::symmetric(4);
  const bool cycles = cl.family == CopointedFamily::FourCycles;
  out.rack = cycles ? four_cycle_rack(&out.perms) : transposition_rack(4, &out.perms);
  const int n = out.rack.size();
  if (static_cast<int>(cl.lambda.size()) != n) throw IndexMismatch("expected one lambda per rack element");
  Rational sum = 0;
  for (const auto& v : cl.lambda) sum += v;
  if (!is_zero(sum)) throw NormalizationViolated("lambda must sum to zero, got " + to_string(sum));
  auto index_of = [&](const Perm& p) {
    return static_cast<int>(std::find(out.perms.begin(), out.perms.end(), p) - out.perms.begin());
  };
  if (cycles)
    for (int x = 0; x < n; ++x)
      if (cl.lambda[x] != cl.lambda[index_of(inverse(out.perms[x]))])
        throw NormalizationViolated("lambda must agree on " + out.rack.label(x) + " and its inverse");

  for (const auto& l : out.rack.labels()) out.names.push_back("x" + l);
  auto f_of = [&](int x) {
    GroupFunction f(static_cast<std::size_t>(out.group.size()));
    for (int g = 0; g < out.group.size(); ++g)
      f[g] = cl.lambda[x] - cl.lambda[index_of(conjugate(inverse(out.group.element(g)), out.perms[x]))];
    return f;
  };

  const Family base = cl.family == CopointedFamily::TranspMinus ? Family::Eminus
                      : cl.family == CopointedFamily::TranspChi ? Family::Echi
                                                                : Family::Etilde;
  DeformedIdeal nichols = nichols_presentation(base, 4);
  auto square = [&](int x) { return FreePoly::monomial(n, make_word({x, x})); };
  auto anticommutator = [&](int x, int y) {
    return FreePoly::monomial(n, make_word({x, y})) + FreePoly::monomial(n, make_word({y, x}));
  };
  std::vector<FreePoly> deformed_lhs;
  for (int x = 0; x < n; ++x) {
    if (!cycles) {
      deformed_lhs.push_back(square(x));
      out.deformed.push_back({square(x), x, f_of(x)});
      continue;
    }
    const int inv = index_of(inverse(out.perms[x]));
    if (inv < x) continue;
    deformed_lhs.push_back(anticommutator(x, inv));
    out.deformed.push_back({anticommutator(x, inv), x, f_of(x)});
  }
  for (const auto& p : nichols.generators)
    if (std::find(deformed_lhs.begin(), deformed_lhs.end(), p) == deformed_lhs.end()) out.fixed.push_back(p);
  return out;
}

}  // namespace rackhopf

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackhopf/braided.hpp"
#include "rackhopf/cocycle.hpp"
#include "rackhopf/freealg.hpp"

namespace rackhopf {

// A class of X×X under (i,j) ~ (i▷j, i), stored as the cycle i_1, i_2, ..., i_L with
// i_{h+2} = i_{h+1} ▷ i_h (indices mod L). Pair h (0-based) is (seq[h+1], seq[h]).
struct RelClass {
  std::vector<int> seq;
  std::vector<Rational> eta;  // filled by annotate_classes
  bool in_rprime = false;

  int size() const { return static_cast<int>(seq.size()); }
  std::pair<int, int> pair(int h) const {
    const int L = size();
    h %= L;
    return {seq[(h + 1) % L], seq[h]};
  }
};

// Partition of X×X in canonical rotation (first pair lexicographically least), classes ordered by
// their first pair.
std::vector<RelClass> enumerate_classes(const Rack& rack);

// Index of the class containing (a, b) and the position h with pair(h) == (a, b).
struct ClassLocator {
  std::vector<int> cls, pos;  // indexed a*n+b
  int n = 0;
  std::pair<int, int> locate(int a, int b) const {
    const std::size_t k = static_cast<std::size_t>(a) * n + b;
    return {cls[k], pos[k]};
  }
};
ClassLocator locate_classes(const std::vector<RelClass>& classes, int n);

// Fills eta and in_rprime for every class.
std::vector<RelClass> annotate_classes(std::vector<RelClass> classes, const Cocycle2& q);
std::vector<RelClass> select_Rprime(const std::vector<RelClass>& classes, const Cocycle2& q);

// V: Σ η_h x_{i_{h+1}} x_{i_h};  W: Σ η_h x_{i_h} x_{i_{h+1}}. Throws NotInRprime.
FreePoly relation_poly(const RelClass& c, Flavor flavor, int alphabet);

struct J2Report {
  std::size_t kernel_dim = 0;
  std::size_t relation_count = 0;
  std::size_t relation_rank = 0;
  bool equal = false;
};
J2Report verify_J2_report(const Cocycle2& q, Flavor flavor);
inline bool verify_J2(const Cocycle2& q, Flavor flavor) { return verify_J2_report(q, flavor).equal; }

// Coefficient vector of a homogeneous quadratic polynomial in the basis x*n+y.
RatVector quadratic_coordinates(const FreePoly& p, int n);

// Parameters λ_C for C in R', tied by rational ratios through a union-find.
class ParamSpace {
 public:
  explicit ParamSpace(std::vector<RelClass> classes);

  const std::vector<RelClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  // Record λ_a = ratio · λ_b.
  void tie(int a, int b, const Rational& ratio);
  void force_zero(int a);

  // (root, r) with λ_a = r · λ_root.
  std::pair<int, Rational> resolve(int a) const;
  bool is_zero(int a) const { return zero_[resolve(a).first] != 0; }
  // Roots that are not forced to zero, in increasing class order.
  std::vector<int> free_generators() const;
  int free_dim() const { return static_cast<int>(free_generators().size()); }
  // λ for every class from values of the free generators.
  std::vector<Rational> expand(const std::vector<Rational>& free_values) const;
  // True iff λ satisfies all recorded ties and zeros.
  bool admits(const std::vector<Rational>& lambda) const;

 private:
  std::vector<RelClass> classes_;
  std::vector<int> parent_;
  std::vector<Rational> ratio_;  // λ_a = ratio_[a] · λ_{parent_[a]}
  std::vector<char> zero_;
  std::vector<std::pair<std::pair<int, int>, Rational>> ties_;
  std::vector<int> zeros_;
};

ParamSpace pointed_lambda_space(const Cocycle2& q);
ParamSpace copointed_lambda_space(const Cocycle2& q);

struct HomVanishing {
  std::vector<bool> admits_map;  // per R' class: some nonzero colinear map exists on b̃_C
  std::vector<int> witness;      // j with φ_{i2}φ_{i1} = φ_j, or -1
  bool all = false;              // Hom vanishes
};
HomVanishing hom_vanishing_check(const Cocycle2& q);

}  // namespace rackhopf

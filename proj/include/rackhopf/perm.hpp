#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rackhopf {

// A permutation of {0..degree-1} stored by images: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int degree);
// Function composition: (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(std::span<const int> p);
// a b a^{-1}
Perm conjugate(const Perm& a, const Perm& b);
int sign(const Perm& p);
int order(const Perm& p);

// 1-based cycle notation without separators, e.g. "(12)", "(1234)", "(12)(34)"; identity is "()".
std::string cycle_string(const Perm& p);
// Inverse of cycle_string for a given degree; accepts "(12)(34)" and "()".
Perm parse_cycles(const std::string& text, int degree);

// Transposition (i j) with 0-based points.
Perm transposition(int degree, int i, int j);

constexpr std::size_t kDefaultClosureCap = 1'000'000;

// A finite permutation group with its elements sorted lexicographically.
class PermGroup {
 public:
  PermGroup() = default;

  // Closure of the generators under composition. Throws ClosureBudgetExceeded past `cap`.
  static PermGroup generate(int degree, std::vector<Perm> generators,
                            std::size_t cap = kDefaultClosureCap);
  static PermGroup symmetric(int n);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  // Position of p in elements(), or -1.
  int index_of(const Perm& p) const;

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::map<Perm, int> index_;
};

// Sorted conjugacy class of `seed` in `group`. Throws SeedNotInGroup.
std::vector<Perm> conjugacy_class(const PermGroup& group, const Perm& seed);

// A permutation group with tabulated multiplication, inverses and identity, addressed by element index.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(PermGroup group);
  static FiniteGroup symmetric(int n) { return FiniteGroup(PermGroup::symmetric(n)); }

  int size() const { return static_cast<int>(group_.order()); }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  const Perm& element(int i) const { return group_.elements()[i]; }
  int index_of(const Perm& p) const { return group_.index_of(p); }
  const PermGroup& perm_group() const { return group_; }
  std::string label(int i) const { return cycle_string(element(i)); }

  // Re-checks associativity, identity and inverse laws on the tables.
  bool check_axioms() const;

 private:
  PermGroup group_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
};

}  // namespace rackhopf

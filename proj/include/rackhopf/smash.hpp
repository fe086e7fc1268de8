#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rackhopf/groebner.hpp"
#include "rackhopf/grouprealize.hpp"

namespace rackhopf {

// Sorted by index, nonzero coefficients.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale = 1);

// Finite-dimensional associative algebra given by structure constants on a basis.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  // table[i*dim + j] = b_i b_j. Throws InvalidInput on shape errors.
  FiniteAlgebra(int dim, std::vector<SparseVec> table, SparseVec unit, std::vector<std::string> names);

  int dim() const { return dim_; }
  const SparseVec& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  const SparseVec& unit() const { return unit_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  int dim_ = 0;
  std::vector<SparseVec> table_;
  SparseVec unit_;
  std::vector<std::string> names_;
};

FiniteAlgebra ground_field();
// Λ(k^n) on subsets of {1..n}, basis ordered by bitmask.
FiniteAlgebra exterior_algebra(int n);

// Quotient of the free algebra by a finite-codimension ideal, on the normal words (deglex order).
// `words`, when given, receives the normal words.
FiniteAlgebra quotient_algebra(const GroebnerBasis& gb, const std::vector<std::string>& generator_names,
                               std::vector<Word>* words = nullptr);

// Action of a Hopf algebra H on A: act[h][i] = b_h · a_i for the basis b_h of H.
struct ModuleAlgebraAction {
  HopfAlgebra hopf;
  std::vector<std::vector<SparseVec>> act;
};

// kG acting by algebra maps determined on basis elements by `image(h, i)`.
ModuleAlgebraAction group_action(const FiniteAlgebra& a, const FiniteGroup& g,
                                 const std::function<SparseVec(int h, int i)>& image);

// k^G acting through a G-grading: δ_s·a_i = [deg a_i = s] a_i.
ModuleAlgebraAction grading_action(const FiniteAlgebra& a, const FiniteGroup& g, const std::vector<int>& degree);

// Action of kG on a quotient of the free algebra induced by letter images h·x_l = c·x_{l'}.
ModuleAlgebraAction letter_action_on_quotient(const GroebnerBasis& gb, const std::vector<Word>& words,
                                              const FiniteGroup& g,
                                              const std::function<std::pair<int, Rational>(int h, int letter)>& image);

// b_h·(a a') = Σ (b_{h(1)}·a)(b_{h(2)}·a') on basis elements and b_h·1 = ε(b_h)1.
// Throws NotModuleAlgebra with the first failing (h, i, j).
void check_module_algebra(const FiniteAlgebra& a, const ModuleAlgebraAction& action);

// A # H on the basis a_i ⊗ b_h (index i*dim H + h) with (a⊗h)(a'⊗h') = a(h_(1)·a') ⊗ h_(2)h'.
FiniteAlgebra smash_product(const FiniteAlgebra& a, const ModuleAlgebraAction& action);

struct AssociativityAudit {
  std::size_t triples = 0;
  std::size_t failures = 0;
  bool monomial_fast_path = false;
  std::string witness;
  bool ok() const { return failures == 0; }
};

// Exhaustive over all basis triples; when every structure constant is a single small integer
// multiple of a basis element the check runs on integer tables.
AssociativityAudit associativity_audit(const FiniteAlgebra& a, Exec exec = Exec::Parallel);

// Same check on `samples` uniformly drawn triples (seeded).
AssociativityAudit associativity_audit_sampled(const FiniteAlgebra& a, std::size_t samples, std::uint64_t seed);

}  // namespace rackhopf

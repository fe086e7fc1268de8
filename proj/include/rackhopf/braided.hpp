#pragma once

#include <cstdint>
#include <vector>

#include "rackhopf/cocycle.hpp"
#include "rackhopf/matrix.hpp"
#include "rackhopf/parallel.hpp"

namespace rackhopf {

enum class Flavor { V, W };

const char* flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

// A braiding of rack type: c(e_x ⊗ e_y) = coeff(x,y) e_a ⊗ e_b with (a,b) = target(x,y).
struct BraidedSpace {
  int dim = 0;
  Flavor flavor = Flavor::V;
  std::vector<int> first, second;  // indexed x*dim+y
  std::vector<Rational> coeff;

  std::size_t at(int x, int y) const { return static_cast<std::size_t>(x) * dim + y; }
};

// V: c(v_x⊗v_y) = q_{x,y} v_{x▷y}⊗v_x.  W: c(w_x⊗w_y) = q_{y,x} w_y⊗w_{y▷x}.
BraidedSpace make_braiding(const Cocycle2& q, Flavor flavor);

// Compares (c⊗id)(id⊗c)(c⊗id) with (id⊗c)(c⊗id)(id⊗c) on all basis tensors.
bool check_braid_equation(const BraidedSpace& c, Exec exec = Exec::Parallel);

// The braiding as a dim²×dim² matrix (column = input basis tensor x*dim+y).
RatMatrix braiding_matrix(const BraidedSpace& c);

constexpr std::uint64_t kDefaultRowBudget = 10'000'000;

enum class ReducedWords { Bubble, Selection };

// Sum over S_m of the braid lift of a reduced word. Column index = input word in base `dim`
// with the first tensor factor most significant. Throws DegreeBudgetExceeded when dim^m > budget.
RatMatrix quantum_symmetrizer(const BraidedSpace& c, int m, Exec exec = Exec::Parallel,
                              ReducedWords words = ReducedWords::Bubble,
                              std::uint64_t budget = kDefaultRowBudget);

// Reduced word (1-based adjacent transposition indices, applied right to left) for a permutation
// in one-line notation.
std::vector<int> reduced_word(const std::vector<int>& perm, ReducedWords method);

// Rank of ς_m, computed blockwise over orbits of the braid group action on basis words.
std::size_t symmetrizer_rank(const BraidedSpace& c, int m, Exec exec = Exec::Parallel,
                             std::uint64_t budget = kDefaultRowBudget);

struct NicholsDims {
  std::vector<std::size_t> dims;  // degree 0..
  std::size_t total = 0;
  bool truncated = false;
};

NicholsDims nichols_dim_oracle(const BraidedSpace& c, int max_deg, Exec exec = Exec::Parallel,
                               std::uint64_t budget = kDefaultRowBudget);

}  // namespace rackhopf

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rackhopf/freealg.hpp"
#include "rackhopf/parallel.hpp"

namespace rackhopf {

// Aho-Corasick automaton over a set of leading words. Accepting states are those whose spelled
// word has no pattern as a suffix; walking from the root through accepting states enumerates
// exactly the words avoiding every pattern as a subword.
class AvoidanceAutomaton {
 public:
  AvoidanceAutomaton(int alphabet, const std::vector<Word>& patterns);

  int alphabet() const { return alphabet_; }
  int states() const { return static_cast<int>(dead_.size()); }
  int next(int state, int letter) const { return goto_[static_cast<std::size_t>(state) * alphabet_ + letter]; }
  bool dead(int state) const { return dead_[state] != 0; }
  // True iff some cycle of live states is reachable from the root (infinitely many normal words).
  bool has_live_cycle() const;

 private:
  int alphabet_;
  std::vector<int> goto_;
  std::vector<char> dead_;
};

struct GroebnerOptions {
  int max_degree = 16;
  std::size_t max_basis = 20'000;
};

struct GroebnerStats {
  std::size_t obstructions_processed = 0;
  std::size_t obstructions_skipped = 0;  // above the degree cutoff
  std::size_t reductions_to_zero = 0;
  std::size_t insertions = 0;
};

// A completed (or degree-truncated) reduced Groebner basis of a two-sided ideal, deglex order.
class GroebnerBasis {
 public:
  GroebnerBasis(int alphabet, std::vector<FreePoly> elements, std::optional<int> truncated_at,
                GroebnerStats stats = {});

  int alphabet() const { return alphabet_; }
  const std::vector<FreePoly>& elements() const { return elements_; }
  bool complete() const { return !truncated_at_.has_value(); }
  std::optional<int> truncated_at() const { return truncated_at_; }
  const GroebnerStats& stats() const { return stats_; }

  // Full reduction; pure and safe to call concurrently on a shared basis.
  FreePoly normal_form(const FreePoly& p) const;
  // True iff no leading word occurs in w.
  bool is_normal_word(const Word& w) const;

 private:
  struct Match {
    int element;
    std::size_t position;
  };
  std::optional<Match> find_divisor(const Word& w) const;

  int alphabet_;
  std::vector<FreePoly> elements_;
  std::optional<int> truncated_at_;
  GroebnerStats stats_;
  // Trie over leading words: children indexed by letter, terminal holds the element index.
  std::vector<int> trie_child_;
  std::vector<int> trie_terminal_;
};

// Noncommutative Buchberger completion with lowest-degree-first obstruction selection.
// Obstructions above options.max_degree are skipped and reported through truncated_at().
// Throws ResourceBudgetExceeded when the basis grows past options.max_basis.
GroebnerBasis groebner(const std::vector<FreePoly>& generators, int alphabet, GroebnerOptions options = {});

FreePoly normal_form(const FreePoly& p, const GroebnerBasis& gb);

std::vector<FreePoly> batch_normal_form(const std::vector<FreePoly>& polys, const GroebnerBasis& gb,
                                        Exec exec = Exec::Parallel);

struct QuotientDim {
  enum class Kind { Finite, Infinite, UnknownTruncated };
  Kind kind;
  std::uint64_t value = 0;
  std::string to_string() const;
};

QuotientDim quotient_dim(const GroebnerBasis& gb);

// Number of normal words in each degree 0..up_to. Throws ResourceBudgetExceeded on 64-bit overflow.
std::vector<std::uint64_t> hilbert_series(const GroebnerBasis& gb, int up_to);

// All normal words, ordered by deglex; throws if the quotient is infinite or exceeds `cap`.
std::vector<Word> normal_words(const GroebnerBasis& gb, std::size_t cap = 1'000'000);

struct TrivialityReport {
  bool trivial = false;
  // False when the basis is truncated and no constant was found.
  bool conclusive = true;
};

TrivialityReport is_trivial_quotient(const GroebnerBasis& gb);

struct ObstructionAudit {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool interreduced = true;
  bool ok() const { return failures == 0 && interreduced; }
};

// Re-derives every overlap S-element of the basis (up to the truncation degree) and checks that
// it reduces to zero, plus checks that no leading word divides another.
ObstructionAudit audit_obstructions(const GroebnerBasis& gb, Exec exec = Exec::Parallel);

}  // namespace rackhopf

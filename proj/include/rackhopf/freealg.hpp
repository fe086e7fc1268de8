#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rackhopf/rational.hpp"

namespace rackhopf {

// A word in the free monoid on {0..alphabet-1}; each char holds one generator index.
using Word = std::string;

inline Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<char>(l));
  return w;
}

inline int letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

// Degree-lexicographic comparison: longer words are larger; equal lengths compare letter by letter
// with the generator order 0 < 1 < ... (std::string compares chars as unsigned).
inline bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

struct Term {
  Word word;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Element of the free associative algebra over Q. Terms are strictly decreasing in deglex and
// carry nonzero coefficients.
class FreePoly {
 public:
  FreePoly() = default;
  explicit FreePoly(int alphabet) : alphabet_(alphabet) {}
  // Normalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  FreePoly(int alphabet, std::vector<Term> terms);

  static FreePoly constant(int alphabet, const Rational& c);
  static FreePoly monomial(int alphabet, Word w, const Rational& c = 1);
  static FreePoly generator(int alphabet, int g) { return monomial(alphabet, Word(1, static_cast<char>(g))); }

  int alphabet() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].word.empty(); }
  const Word& leading_word() const { return terms_.front().word; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().word.size()); }
  bool is_homogeneous() const;

  FreePoly monic() const;
  // prefix * this * suffix, scaled.
  FreePoly sandwich(const Word& prefix, const Word& suffix, const Rational& scale = 1) const;

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Rational& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const Rational& c) { return a *= c; }
  friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  FreePoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const FreePoly&, const FreePoly&) = default;

  // "x1*x2 - 3/2*x0 + 1" style rendering using generator names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int alphabet_ = 0;
  std::vector<Term> terms_;
};

// Generator names "x<label>" for alphabets whose labels come from a rack.
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace rackhopf

#include "rackhopf/freealg.hpp"

#include <algorithm>
#include <map>

#include "rackhopf/errors.hpp"

namespace rackhopf {

namespace {

using TermMap = std::map<Word, Rational, DeglexGreater>;

std::vector<Term> flatten(TermMap&& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [w, c] : m)
    if (!is_zero(c)) out.push_back({w, std::move(c)});
  return out;
}

// Merge two sorted term lists, with b scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && deglex_less(b[j].word, a[i].word))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || deglex_less(a[i].word, b[j].word)) {
      out.push_back({b[j].word, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (!is_zero(c)) out.push_back({a[i].word, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_alphabet(int a, int b) {
  if (a != b) throw InvalidInput("free algebra elements over different alphabets");
}

}  // namespace

FreePoly::FreePoly(int alphabet, std::vector<Term> terms) : alphabet_(alphabet) {
  TermMap m;
  for (auto& t : terms) {
    for (char c : t.word)
      if (static_cast<unsigned char>(c) >= static_cast<unsigned>(alphabet))
        throw InvalidInput("word letter outside the alphabet");
    Rational c = t.coeff;
    c.canonicalize();
    m[t.word] += c;
  }
  terms_ = flatten(std::move(m));
}

FreePoly FreePoly::constant(int alphabet, const Rational& c) { return monomial(alphabet, Word{}, c); }

FreePoly FreePoly::monomial(int alphabet, Word w, const Rational& c) {
  FreePoly p(alphabet);
  if (rackhopf::is_zero(c)) return p;
  p.terms_.push_back({std::move(w), c});
  p.terms_.back().coeff.canonicalize();
  return p;
}

bool FreePoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.word.size() != terms_.front().word.size()) return false;
  return true;
}

FreePoly FreePoly::monic() const {
  if (is_zero()) return *this;
  FreePoly p = *this;
  const Rational inv = 1 / leading_coeff();
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

FreePoly FreePoly::sandwich(const Word& prefix, const Word& suffix, const Rational& scale) const {
  FreePoly p(alphabet_);
  if (rackhopf::is_zero(scale)) return p;
  p.terms_.reserve(terms_.size());
  // Concatenating a fixed prefix/suffix preserves deglex order.
  for (const auto& t : terms_) p.terms_.push_back({prefix + t.word + suffix, t.coeff * scale});
  return p;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  check_alphabet(alphabet_, o.alphabet_);
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  check_alphabet(alphabet_, o.alphabet_);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
  if (rackhopf::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  check_alphabet(a.alphabet_, b.alphabet_);
  TermMap m;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) m[s.word + t.word] += s.coeff * t.coeff;
  FreePoly p(a.alphabet_);
  p.terms_ = flatten(std::move(m));
  return p;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += names.at(letter(w, i));
  }
  return s;
}

std::string FreePoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    if (t.word.empty()) {
      s += rackhopf::to_string(c);
    } else {
      if (c != 1) s += rackhopf::to_string(c) + "*";
      s += word_to_string(t.word, names);
    }
  }
  return s;
}

}  // namespace rackhopf

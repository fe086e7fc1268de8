#pragma once

#include <string>
#include <vector>

#include "rackhopf/rack.hpp"
#include "rackhopf/rational.hpp"

namespace rackhopf {

// A validated rational 2-cocycle: q_{x,y▷z} q_{y,z} = q_{x▷y,x▷z} q_{x,z}.
class Cocycle2 {
 public:
  const Rack& rack() const { return rack_; }
  const Rational& q(int x, int y) const { return q_[x][y]; }
  const std::vector<std::vector<Rational>>& values() const { return q_; }
  int size() const { return rack_.size(); }

 private:
  friend Cocycle2 validate_cocycle(const Rack& rack, std::vector<std::vector<Rational>> values);
  Rack rack_;
  std::vector<std::vector<Rational>> q_;
};

// Throws ZeroEntry(x,y) or CocycleLawFails(x,y,z).
Cocycle2 validate_cocycle(const Rack& rack, std::vector<std::vector<Rational>> values);

Cocycle2 constant_cocycle(const Rack& rack, const Rational& omega);

// q_{g,(ij)} = +1 if g(i) < g(j) else -1 (i < j), on the transposition rack of S_n.
// Throws WrongRackForChi when `rack` is not transposition_rack(n).
Cocycle2 chi_cocycle(const Rack& rack, int n);

// "const:<rational>" or "chi" (the latter needs a transposition rack; n is inferred).
Cocycle2 make_cocycle(const Rack& rack, const std::string& spec);

}  // namespace rackhopf

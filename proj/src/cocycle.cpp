#include "rackhopf/cocycle.hpp"

#include "rackhopf/errors.hpp"

namespace rackhopf {

Cocycle2 validate_cocycle(const Rack& rack, std::vector<std::vector<Rational>> values) {
  const int n = rack.size();
  if (static_cast<int>(values.size()) != n) throw InvalidInput("cocycle table must be n x n");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(values[x].size()) != n) throw InvalidInput("cocycle table must be n x n");
    for (int y = 0; y < n; ++y) {
      values[x][y].canonicalize();
      if (is_zero(values[x][y])) throw ZeroEntry(x, y);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Rational lhs = values[x][rack.op(y, z)] * values[y][z];
        const Rational rhs = values[rack.op(x, y)][rack.op(x, z)] * values[x][z];
        if (lhs != rhs) throw CocycleLawFails(x, y, z);
      }
  Cocycle2 c;
  c.rack_ = rack;
  c.q_ = std::move(values);
  return c;
}

Cocycle2 constant_cocycle(const Rack& rack, const Rational& omega) {
  const int n = rack.size();
  return validate_cocycle(rack, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, omega)));
}

Cocycle2 chi_cocycle(const Rack& rack, int n) {
  if (n < 2) throw WrongRackForChi();
  std::vector<Perm> perms;
  Rack expected = transposition_rack(n, &perms);
  if (!(expected == rack)) throw WrongRackForChi();
  const int m = rack.size();
  std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
  for (int g = 0; g < m; ++g)
    for (int t = 0; t < m; ++t) {
      int i = -1, j = -1;
      for (int p = 0; p < n; ++p)
        if (perms[t][p] != p) {
          if (i < 0) i = p;
          else j = p;
        }
      q[g][t] = perms[g][i] < perms[g][j] ? 1 : -1;
    }
  return validate_cocycle(rack, std::move(q));
}

Cocycle2 make_cocycle(const Rack& rack, const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) return constant_cocycle(rack, parse_rational(spec.substr(6)));
  if (spec == "chi") {
    // n(n-1)/2 transpositions
    for (int n = 2; n <= 9; ++n)
      if (n * (n - 1) / 2 == rack.size()) return chi_cocycle(rack, n);
    throw WrongRackForChi();
  }
  throw InvalidInput("unknown cocycle '" + spec + "' (expected const:<q> or chi)");
}

}  // namespace rackhopf

#include "rackhopf/quadrel.hpp"

#include <algorithm>

#include "rackhopf/errors.hpp"

namespace rackhopf {

std::vector<RelClass> enumerate_classes(const Rack& rack) {
  const int n = rack.size();
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<RelClass> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(i) * n + j]) continue;
      // Lexicographic scan: (i, j) is the least pair of its class.
      RelClass c;
      int a = i, b = j;  // current pair (i_{h+1}, i_h)
      c.seq.push_back(j);
      do {
        seen[static_cast<std::size_t>(a) * n + b] = 1;
        const int next = rack.op(a, b);
        c.seq.push_back(a);
        b = a;
        a = next;
      } while (!(a == i && b == j));
      // seq holds i_1..i_L followed by i_{L+1} = i_1; drop the repeat.
      c.seq.pop_back();
      out.push_back(std::move(c));
    }
  return out;
}

ClassLocator locate_classes(const std::vector<RelClass>& classes, int n) {
  ClassLocator loc;
  loc.n = n;
  loc.cls.assign(static_cast<std::size_t>(n) * n, -1);
  loc.pos.assign(loc.cls.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int h = 0; h < classes[c].size(); ++h) {
      auto [a, b] = classes[c].pair(h);
      loc.cls[static_cast<std::size_t>(a) * n + b] = static_cast<int>(c);
      loc.pos[static_cast<std::size_t>(a) * n + b] = h;
    }
  return loc;
}

std::vector<RelClass> annotate_classes(std::vector<RelClass> classes, const Cocycle2& q) {
  for (auto& c : classes) {
    const int L = c.size();
    c.eta.assign(L, 0);
    Rational prod = 1;
    for (int h = 0; h < L; ++h) {
      auto [a, b] = c.pair(h);
      prod *= q.q(a, b);
      // η_{h+1} = (-1)^h Π_{t=1..h} q(pair t-1 shifted): q_{i_2 i_1} ... q_{i_{h+1} i_h}
      c.eta[h] = (h % 2 == 0 ? 1 : -1) * (h == 0 ? Rational(1) : prod / q.q(a, b));
    }
    c.in_rprime = prod == ((L % 2) ? -1 : 1);
  }
  return classes;
}

std::vector<RelClass> select_Rprime(const std::vector<RelClass>& classes, const Cocycle2& q) {
  std::vector<RelClass> out;
  for (auto& c : annotate_classes(classes, q))
    if (c.in_rprime) out.push_back(c);
  return out;
}

FreePoly relation_poly(const RelClass& c, Flavor flavor, int alphabet) {
  if (!c.in_rprime) throw NotInRprime();
  std::vector<Term> terms;
  for (int h = 0; h < c.size(); ++h) {
    auto [a, b] = c.pair(h);
    terms.push_back({flavor == Flavor::V ? make_word({a, b}) : make_word({b, a}), c.eta[h]});
  }
  return FreePoly(alphabet, std::move(terms));
}

RatVector quadratic_coordinates(const FreePoly& p, int n) {
  RatVector v(static_cast<std::size_t>(n) * n);
  for (const auto& t : p.terms()) {
    if (t.word.size() != 2) throw InvalidInput("expected a homogeneous quadratic polynomial");
    v[static_cast<std::size_t>(letter(t.word, 0)) * n + letter(t.word, 1)] += t.coeff;
  }
  return v;
}

J2Report verify_J2_report(const Cocycle2& q, Flavor flavor) {
  const int n = q.size();
  const std::size_t d2 = static_cast<std::size_t>(n) * n;
  BraidedSpace c = make_braiding(q, flavor);
  RatMatrix s2 = RatMatrix::identity(d2) + braiding_matrix(c);
  KernelData kd = kernel_data(s2);
  std::vector<RatVector> rels;
  for (const auto& cls : select_Rprime(enumerate_classes(q.rack()), q))
    rels.push_back(quadratic_coordinates(relation_poly(cls, flavor, n), n));
  J2Report r;
  r.kernel_dim = kd.kernel.size();
  r.relation_count = rels.size();
  auto rel_rref = rref_rows(rels, d2);
  r.relation_rank = rel_rref.size();
  r.equal = rel_rref == kd.kernel;
  return r;
}

// ---------------------------------------------------------------------------------------------

ParamSpace::ParamSpace(std::vector<RelClass> classes)
    : classes_(std::move(classes)), parent_(classes_.size()), ratio_(classes_.size(), 1), zero_(classes_.size(), 0) {
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
}

std::pair<int, Rational> ParamSpace::resolve(int a) const {
  Rational r = 1;
  while (parent_[a] != a) {
    r *= ratio_[a];
    a = parent_[a];
  }
  return {a, r};
}

void ParamSpace::tie(int a, int b, const Rational& ratio) {
  ties_.push_back({{a, b}, ratio});
  auto [ra, fa] = resolve(a);
  auto [rb, fb] = resolve(b);
  // λ_a = fa λ_ra, λ_b = fb λ_rb, λ_a = ratio λ_b.
  if (ra == rb) {
    if (fa != ratio * fb) zero_[ra] = 1;
    return;
  }
  // λ_ra = (ratio fb / fa) λ_rb; attach the larger root below the smaller.
  if (ra > rb) {
    parent_[ra] = rb;
    ratio_[ra] = ratio * fb / fa;
    zero_[rb] = zero_[rb] || zero_[ra];
  } else {
    parent_[rb] = ra;
    ratio_[rb] = fa / (ratio * fb);
    zero_[ra] = zero_[ra] || zero_[rb];
  }
}

void ParamSpace::force_zero(int a) {
  zeros_.push_back(a);
  zero_[resolve(a).first] = 1;
}

std::vector<int> ParamSpace::free_generators() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (parent_[i] == static_cast<int>(i) && !zero_[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Rational> ParamSpace::expand(const std::vector<Rational>& free_values) const {
  auto gens = free_generators();
  if (free_values.size() != gens.size()) throw IndexMismatch("expected " + std::to_string(gens.size()) + " free values");
  std::vector<Rational> out(classes_.size(), 0);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    auto [root, r] = resolve(static_cast<int>(i));
    if (zero_[root]) continue;
    auto it = std::find(gens.begin(), gens.end(), root);
    out[i] = r * free_values[it - gens.begin()];
  }
  return out;
}

bool ParamSpace::admits(const std::vector<Rational>& lambda) const {
  if (lambda.size() != classes_.size()) return false;
  for (const auto& [ab, r] : ties_)
    if (lambda[ab.first] != r * lambda[ab.second]) return false;
  for (int z : zeros_)
    if (!rackhopf::is_zero(lambda[z])) return false;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (zero_[resolve(static_cast<int>(i)).first] && !rackhopf::is_zero(lambda[i])) return false;
  return true;
}

ParamSpace pointed_lambda_space(const Cocycle2& q) {
  const Rack& rack = q.rack();
  const int n = rack.size();
  auto all = annotate_classes(enumerate_classes(rack), q);
  auto loc = locate_classes(all, n);
  std::vector<int> rprime_index(all.size(), -1);
  std::vector<RelClass> rp;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].in_rprime) {
      rprime_index[i] = static_cast<int>(rp.size());
      rp.push_back(all[i]);
    }
  ParamSpace space(rp);
  for (std::size_t ci = 0; ci < rp.size(); ++ci) {
    const RelClass& c = rp[ci];
    for (int x = 0; x < n; ++x) {
      // x ▷ C is the class D of x ▷ (i_2, i_1); find h with x ▷ pair(h) = D's first pair.
      auto [a, b] = c.pair(0);
      const int d = loc.locate(rack.op(x, a), rack.op(x, b)).first;
      if (rprime_index[d] < 0) {
        space.force_zero(static_cast<int>(ci));
        continue;
      }
      auto first = all[d].pair(0);
      int h = -1;
      for (int k = 0; k < c.size(); ++k) {
        auto [u, v] = c.pair(k);
        if (rack.op(x, u) == first.first && rack.op(x, v) == first.second) {
          h = k;
          break;
        }
      }
      auto [u, v] = c.pair(h);
      Rational ratio = c.eta[h] * q.q(x, u) * q.q(x, v);
      space.tie(static_cast<int>(ci), rprime_index[d], ratio);
    }
  }
  return space;
}

ParamSpace copointed_lambda_space(const Cocycle2& q) {
  const Rack& rack = q.rack();
  const int n = rack.size();
  ParamSpace space(select_Rprime(enumerate_classes(rack), q));
  for (std::size_t ci = 0; ci < space.size(); ++ci) {
    const RelClass& c = space.classes()[ci];
    const int i1 = c.seq[0], i2 = c.seq[1 % c.size()];
    bool survives = true;
    for (int x = 0; x < n && survives; ++x) {
      const int y = rack.op(i1, x);
      survives = rack.op(i2, y) == x && q.q(i1, x) * q.q(i2, y) == 1;
    }
    if (!survives) space.force_zero(static_cast<int>(ci));
  }
  return space;
}

HomVanishing hom_vanishing_check(const Cocycle2& q) {
  const Rack& rack = q.rack();
  const int n = rack.size();
  auto rp = select_Rprime(enumerate_classes(rack), q);
  HomVanishing out;
  out.all = true;
  for (const auto& c : rp) {
    const int i1 = c.seq[0], i2 = c.seq[1 % c.size()];
    int witness = -1;
    for (int j = 0; j < n && witness < 0; ++j) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        const int y = rack.op(i1, x);
        ok = rack.op(j, x) == rack.op(i2, y) && q.q(j, x) == q.q(i1, x) * q.q(i2, y);
      }
      if (ok) witness = j;
    }
    out.admits_map.push_back(witness >= 0);
    out.witness.push_back(witness);
    if (witness >= 0) out.all = false;
  }
  return out;
}

}  // namespace rackhopf

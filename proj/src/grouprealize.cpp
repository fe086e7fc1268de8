#include "rackhopf/grouprealize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rackhopf/errors.hpp"

namespace rackhopf {

const char* hopf_kind_name(HopfKind k) { return k == HopfKind::GroupAlgebra ? "kG" : "k^G"; }
const char* side_name(Side s) { return s == Side::Pointed ? "pointed" : "copointed"; }

HopfAlgebra::HopfAlgebra(FiniteGroup group, HopfKind kind) : group_(std::move(group)), kind_(kind) {
  const int n = dim();
  coproduct_.resize(n);
  for (int i = 0; i < n; ++i) {
    if (kind_ == HopfKind::GroupAlgebra) {
      coproduct_[i] = {{i, i}};
    } else {
      for (int a = 0; a < n; ++a) coproduct_[i].push_back({a, group_.mul(group_.inv(a), i)});
    }
  }
}

HopfElement HopfAlgebra::unit() const {
  if (kind_ == HopfKind::GroupAlgebra) return basis(group_.identity());
  return HopfElement(static_cast<std::size_t>(dim()), Rational(1));
}

HopfElement HopfAlgebra::basis(int i) const {
  HopfElement e = zero();
  e.at(i) = 1;
  return e;
}

HopfElement HopfAlgebra::mul(const HopfElement& a, const HopfElement& b) const {
  HopfElement out = zero();
  const int n = dim();
  if (kind_ == HopfKind::FunctionAlgebra) {
    for (int i = 0; i < n; ++i) out[i] = a[i] * b[i];
    return out;
  }
  for (int g = 0; g < n; ++g) {
    if (is_zero(a[g])) continue;
    for (int h = 0; h < n; ++h)
      if (!is_zero(b[h])) out[group_.mul(g, h)] += a[g] * b[h];
  }
  return out;
}

Rational HopfAlgebra::counit(const HopfElement& a) const {
  if (kind_ == HopfKind::FunctionAlgebra) return a[group_.identity()];
  Rational s = 0;
  for (const auto& c : a) s += c;
  return s;
}

HopfElement HopfAlgebra::antipode(const HopfElement& a) const {
  // Both algebras: b_g ↦ b_{g⁻¹}.
  HopfElement out = zero();
  for (int g = 0; g < dim(); ++g) out[group_.inv(g)] = a[g];
  return out;
}

bool HopfAlgebra::check_axioms() const {
  const int n = dim();
  auto add_scaled = [](HopfElement& acc, const HopfElement& x, const Rational& c) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * x[i];
  };
  for (int i = 0; i < n; ++i) {
    if (mul(unit(), basis(i)) != basis(i) || mul(basis(i), unit()) != basis(i)) return false;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k)))) return false;
    std::multiset<std::tuple<int, int, int>> left, right;
    for (auto [a, b] : coproduct(i)) {
      for (auto [c, d] : coproduct(a)) left.insert({c, d, b});
      for (auto [c, d] : coproduct(b)) right.insert({a, c, d});
    }
    if (left != right) return false;
    HopfElement l = zero(), r = zero(), s = zero();
    for (auto [a, b] : coproduct(i)) {
      add_scaled(l, basis(b), counit(basis(a)));
      add_scaled(r, basis(a), counit(basis(b)));
      add_scaled(s, mul(antipode(basis(a)), basis(b)), 1);
    }
    HopfElement eps_unit = unit();
    for (auto& c : eps_unit) c *= counit(basis(i));
    if (l != basis(i) || r != basis(i) || s != eps_unit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------

PrincipalRealization make_realization(FiniteGroup group, Rack rack, std::vector<std::vector<int>> action,
                                      std::vector<int> g, std::vector<std::vector<Rational>> chi) {
  const int order = group.size(), n = rack.size();
  if (static_cast<int>(action.size()) != order) throw InvalidInput("action needs one row per group element");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != n || !is_permutation(row))
      throw InvalidInput("each action row must be a permutation of the rack");
  }
  if (static_cast<int>(g.size()) != n) throw InvalidInput("degree map needs one group element per rack element");
  for (int x : g)
    if (x < 0 || x >= order) throw InvalidInput("degree map value outside the group");
  if (static_cast<int>(chi.size()) != n) throw InvalidInput("chi needs one character per rack element");
  for (const auto& row : chi) {
    if (static_cast<int>(row.size()) != order) throw InvalidInput("each chi row needs one value per group element");
    for (const auto& v : row)
      if (is_zero(v)) throw InvalidInput("chi values must be nonzero");
  }
  return {std::move(group), std::move(rack), std::move(action), std::move(g), std::move(chi)};
}

PrincipalRealization conjugation_realization(const FiniteGroup& group, const Rack& rack,
                                             const std::vector<Perm>& perms, const std::string& chi) {
  const int order = group.size(), n = rack.size();
  if (static_cast<int>(perms.size()) != n) throw InvalidInput("one permutation per rack element is required");
  std::vector<std::vector<int>> action(order, std::vector<int>(n));
  for (int h = 0; h < order; ++h)
    for (int x = 0; x < n; ++x) {
      auto it = std::find(perms.begin(), perms.end(), conjugate(group.element(h), perms[x]));
      if (it == perms.end()) throw InvalidInput("rack permutations are not closed under conjugation");
      action[h][x] = static_cast<int>(it - perms.begin());
    }
  std::vector<int> g(n);
  for (int x = 0; x < n; ++x) {
    g[x] = group.index_of(perms[x]);
    if (g[x] < 0) throw SeedNotInGroup();
  }
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(order));
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < order; ++h) {
      if (chi == "sgn") {
        values[x][h] = sign(group.element(h));
      } else if (chi == "ms-chi") {
        std::vector<int> moved;
        for (int i = 0; i < static_cast<int>(perms[x].size()); ++i)
          if (perms[x][i] != i) moved.push_back(i);
        if (moved.size() != 2) throw WrongRackForChi();
        const Perm& p = group.element(h);
        values[x][h] = p[moved[0]] < p[moved[1]] ? 1 : -1;
      } else if (chi.rfind("const:", 0) == 0) {
        values[x][h] = parse_rational(chi.substr(6));
      } else {
        throw InvalidInput("unknown character '" + chi + "' (expected sgn, ms-chi or const:<r>)");
      }
    }
  return make_realization(group, rack, std::move(action), std::move(g), std::move(values));
}

PrincipalRealization named_realization(const std::string& name) {
  std::vector<Perm> perms;
  if (name == "o24-sgn" || name == "o24-chi") {
    Rack r = transposition_rack(4, &perms);
    return conjugation_realization(FiniteGroup::symmetric(4), r, perms, name == "o24-sgn" ? "sgn" : "ms-chi");
  }
  if (name == "o44-sgn") {
    Rack r = four_cycle_rack(&perms);
    return conjugation_realization(FiniteGroup::symmetric(4), r, perms, "sgn");
  }
  if (name == "o23-sgn") {
    Rack r = transposition_rack(3, &perms);
    return conjugation_realization(FiniteGroup::symmetric(3), r, perms, "sgn");
  }
  throw InvalidInput("unknown realization '" + name + "' (expected o24-sgn, o24-chi, o44-sgn or o23-sgn)");
}

Cocycle2 realization_cocycle(const PrincipalRealization& r) {
  const int n = r.rack.size();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = r.chi[j][r.g[i]];
  return validate_cocycle(r.rack, std::move(q));
}

bool AuditReport::all() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok(); });
}

namespace {

// Runs body(i, part) for i in [0, n) and merges the parts in index order, so the witness is the
// first failure in iteration order whichever path runs.
template <class Body>
AxiomCheck run_check(std::string name, int n, Exec exec, Body body) {
  std::vector<AxiomCheck> parts(static_cast<std::size_t>(n));
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) body(i, parts[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) body(i, parts[i]);
  }
  AxiomCheck out;
  out.name = std::move(name);
  for (auto& p : parts) {
    out.checked += p.checked;
    out.failures += p.failures;
    if (out.witness.empty()) out.witness = std::move(p.witness);
  }
  return out;
}

void record(AxiomCheck& c, bool ok, const std::string& witness) {
  ++c.checked;
  if (ok) return;
  ++c.failures;
  if (c.witness.empty()) c.witness = witness;
}

std::string tuple_text(std::initializer_list<std::string> parts) {
  std::string s = "(";
  bool first = true;
  for (const auto& p : parts) {
    s += (first ? "" : ",") + p;
    first = false;
  }
  return s + ")";
}

}  // namespace

AuditReport validate_principal(const PrincipalRealization& r, const Cocycle2& q, Exec exec) {
  const FiniteGroup& G = r.group;
  const int order = G.size(), n = r.rack.size();
  if (q.size() != n) throw IndexMismatch("cocycle and realization racks differ in size");
  auto L = [&](int x) { return r.rack.label(x); };
  auto H = [&](int h) { return G.label(h); };
  AuditReport rep;
  rep.checks.push_back(run_check("group-action", order, exec, [&](int h, AxiomCheck& c) {
    for (int k = 0; k < order; ++k)
      for (int x = 0; x < n; ++x) {
        bool ok = r.action[G.mul(h, k)][x] == r.action[h][r.action[k][x]];
        if (h == G.identity()) ok = ok && r.action[h][x] == x;
        record(c, ok, tuple_text({H(h), H(k), L(x)}));
      }
  }));
  rep.checks.push_back(run_check("degree-equivariance", order, exec, [&](int h, AxiomCheck& c) {
    for (int i = 0; i < n; ++i)
      record(c, r.g[r.action[h][i]] == G.mul(G.mul(h, r.g[i]), G.inv(h)), tuple_text({H(h), L(i)}));
  }));
  rep.checks.push_back(run_check("degree-rack", n, exec, [&](int i, AxiomCheck& c) {
    for (int j = 0; j < n; ++j) record(c, r.action[r.g[i]][j] == r.rack.op(i, j), tuple_text({L(i), L(j)}));
  }));
  rep.checks.push_back(run_check("character-cocycle", n, exec, [&](int i, AxiomCheck& c) {
    for (int j = 0; j < n; ++j) record(c, r.chi[i][r.g[j]] == q.q(j, i), tuple_text({L(i), L(j)}));
  }));
  rep.checks.push_back(run_check("one-cocycle", order, exec, [&](int h, AxiomCheck& c) {
    for (int t = 0; t < order; ++t)
      for (int i = 0; i < n; ++i)
        record(c, r.chi[i][G.mul(h, t)] == r.chi[i][t] * r.chi[r.action[t][i]][h], tuple_text({H(h), H(t), L(i)}));
  }));
  return rep;
}

// ---------------------------------------------------------------------------------------------

Rational YDStructure::act(int x, int y, const HopfElement& h) const {
  Rational s = 0;
  const auto& m = mu[x][y];
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!is_zero(h[i]) && !is_zero(m[i])) s += h[i] * m[i];
  return s;
}

YDStructure yd_structure(const PrincipalRealization& r, Side side) {
  const FiniteGroup& G = r.group;
  const int order = G.size(), n = r.rack.size();
  HopfAlgebra kG(G, HopfKind::GroupAlgebra);
  // Pointed data first; the copointed structure is its image under the dual functor.
  std::vector<std::vector<std::vector<Rational>>> mu(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(order)));
  std::vector<std::vector<HopfElement>> e(n, std::vector<HopfElement>(n, kG.zero()));
  for (int x = 0; x < n; ++x) {
    for (int h = 0; h < order; ++h) mu[x][r.action[h][x]][h] = r.chi[x][h];
    e[x][x] = kG.basis(r.g[x]);
  }
  if (side == Side::Pointed) return {std::move(kG), std::move(e), std::move(mu)};

  HopfAlgebra kG_dual(G, HopfKind::FunctionAlgebra);
  auto mu_c = mu;
  auto e_c = e;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int t = 0; t < order; ++t) {
        mu_c[x][y][t] = e[x][y][G.inv(t)];  // ⟨δ_t, S(e_xy)⟩
        e_c[x][y][t] = mu[x][y][G.inv(t)];   // λ(w) = Σ_t δ_t ⊗ t⁻¹·w
      }
  return {std::move(kG_dual), std::move(e_c), std::move(mu_c)};
}

std::vector<std::vector<HopfElement>> comatrix_elements(const PrincipalRealization& r, Side side) {
  return yd_structure(r, side).e;
}

AuditReport comatrix_action_audit(const PrincipalRealization& r, Side side, const Cocycle2& q, Exec exec) {
  const int n = r.rack.size();
  if (q.size() != n) throw IndexMismatch("cocycle and realization racks differ in size");
  const YDStructure Y = yd_structure(r, side);
  const HopfAlgebra& A = Y.hopf;
  const Rack& X = r.rack;
  auto L = [&](int x) { return X.label(x); };
  auto delta = [](bool b) { return Rational(b ? 1 : 0); };
  const bool pointed = side == Side::Pointed;
  AuditReport rep;

  rep.checks.push_back(run_check("action-formula", n, exec, [&](int x, AxiomCheck& c) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          Rational expect = pointed ? delta(z == t && y == X.op(z, x)) * q.q(z, x)
                                    : delta(x == y && t == X.op(x, z)) * q.q(x, z);
          record(c, Y.act(x, y, Y.e[z][t]) == expect, tuple_text({L(x), L(y), L(z), L(t)}));
        }
  }));
  rep.checks.push_back(run_check("action-formula-antipode", n, exec, [&](int x, AxiomCheck& c) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          Rational expect = pointed ? delta(z == t && x == X.op(z, y)) / q.q(z, y)
                                    : delta(x == y && z == X.op(x, t)) / q.q(x, t);
          record(c, Y.act(x, y, A.antipode(Y.e[z][t])) == expect, tuple_text({L(x), L(y), L(z), L(t)}));
        }
  }));
  rep.checks.push_back(run_check("comatrix-relation", n, exec, [&](int s, AxiomCheck& c) {
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const HopfElement& est = Y.e[s][t];
          const HopfElement& exy = Y.e[x][y];
          const HopfElement& ext = Y.e[X.op(s, x)][X.op(t, y)];
          HopfElement lhs = pointed ? A.mul(est, exy) : A.mul(exy, est);
          HopfElement rhs = pointed ? A.mul(ext, est) : A.mul(est, ext);
          for (auto& v : lhs) v *= q.q(t, y);
          for (auto& v : rhs) v *= q.q(s, x);
          record(c, lhs == rhs, tuple_text({L(s), L(t), L(x), L(y)}));
        }
  }));
  rep.checks.push_back(run_check("yd-condition", n, exec, [&](int x, AxiomCheck& c) {
    for (int z = 0; z < n; ++z)
      for (int h = 0; h < A.dim(); ++h) {
        HopfElement lhs = A.zero(), rhs = A.zero();
        for (auto [a, b] : A.coproduct(h))
          for (int y = 0; y < n; ++y) {
            const Rational& l = Y.mu[x][y][a];
            if (!is_zero(l)) {
              HopfElement p = A.mul(Y.e[y][z], A.basis(b));
              for (int i = 0; i < A.dim(); ++i) lhs[i] += l * p[i];
            }
            const Rational& rr = Y.mu[y][z][b];
            if (!is_zero(rr)) {
              HopfElement p = A.mul(A.basis(a), Y.e[x][y]);
              for (int i = 0; i < A.dim(); ++i) rhs[i] += rr * p[i];
            }
          }
        record(c, lhs == rhs, tuple_text({L(x), L(z), A.group().label(h)}));
      }
  }));
  rep.checks.push_back(run_check("comatrix-coalgebra", n, exec, [&](int x, AxiomCheck& c) {
    for (int z = 0; z < n; ++z) {
      std::map<std::pair<int, int>, Rational> lhs, rhs;
      const HopfElement& exz = Y.e[x][z];
      for (int i = 0; i < A.dim(); ++i)
        if (!is_zero(exz[i]))
          for (auto ab : A.coproduct(i)) lhs[ab] += exz[i];
      for (int y = 0; y < n; ++y)
        for (int a = 0; a < A.dim(); ++a) {
          if (is_zero(Y.e[x][y][a])) continue;
          for (int b = 0; b < A.dim(); ++b)
            if (!is_zero(Y.e[y][z][b])) rhs[{a, b}] += Y.e[x][y][a] * Y.e[y][z][b];
        }
      std::erase_if(lhs, [](const auto& kv) { return is_zero(kv.second); });
      std::erase_if(rhs, [](const auto& kv) { return is_zero(kv.second); });
      record(c, lhs == rhs && A.counit(exz) == delta(x == z), tuple_text({L(x), L(z)}));
    }
  }));
  return rep;
}

DualBraidingReport dual_braiding_check(const PrincipalRealization& r) {
  const YDStructure Y = yd_structure(r, Side::Copointed);
  const int n = Y.size();
  RatMatrix got(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
  // c(w_x ⊗ w_y) = Σ_{x'} (e_{xx'}·w_y) ⊗ w_{x'}
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int xp = 0; xp < n; ++xp)
        for (int yp = 0; yp < n; ++yp) {
          Rational v = Y.act(y, yp, Y.e[x][xp]);
          if (!is_zero(v)) got.set(static_cast<std::size_t>(yp) * n + xp, static_cast<std::size_t>(x) * n + y, v);
        }
  RatMatrix want = braiding_matrix(make_braiding(realization_cocycle(r), Flavor::W));
  DualBraidingReport rep;
  const auto a = got.to_dense(), b = want.to_dense();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) ++rep.mismatches;
  rep.equal = rep.mismatches == 0;
  return rep;
}

ThetaReport theta_characters(const PrincipalRealization& r) {
  const YDStructure Y = yd_structure(r, Side::Copointed);
  const FiniteGroup& G = r.group;
  const int n = Y.size(), order = G.size();
  std::vector<GroupFunction> theta(n, GroupFunction(order));
  ThetaReport rep;
  for (int z = 0; z < n; ++z) {
    for (int t = 0; t < order; ++t) theta[z][t] = Y.mu[z][z][t];
    int at = -1, ones = 0;
    bool others_zero = true;
    for (int t = 0; t < order; ++t) {
      if (theta[z][t] == 1) {
        at = t;
        ++ones;
      } else if (!is_zero(theta[z][t])) {
        others_zero = false;
      }
    }
    rep.evaluation_at.push_back(ones == 1 && others_zero ? at : -1);
  }
  // Characters of k^G multiply by convolution: (θ*θ')(δ_s) = Σ_{ab=s} θ(δ_a)θ'(δ_b).
  auto conv = [&](const GroupFunction& a, const GroupFunction& b) {
    GroupFunction out(order);
    for (int s = 0; s < order; ++s)
      for (int x = 0; x < order; ++x)
        if (!is_zero(a[x])) out[s] += a[x] * b[G.mul(G.inv(x), s)];
    return out;
  };
  for (int z = 0; z < n; ++z)
    for (int t = 0; t < n; ++t) {
      ++rep.relation_checked;
      if (conv(theta[z], theta[t]) != conv(theta[t], theta[r.rack.op(t, z)])) ++rep.relation_failures;
    }
  std::set<GroupFunction> unique(theta.begin(), theta.end());
  rep.distinct = static_cast<int>(unique.size()) == n;
  rep.faithful = rack_properties(r.rack).faithful;
  return rep;
}

std::vector<std::vector<int>> rational_linear_characters(const FiniteGroup& G) {
  const int order = G.size();
  const int degree = G.perm_group().degree();
  // Greedy generating set: add elements outside the current closure.
  std::vector<int> gens;
  std::vector<Perm> gen_perms;
  PermGroup closure = PermGroup::generate(degree, {});
  for (int i = 0; i < order && static_cast<int>(closure.order()) < order; ++i) {
    if (closure.contains(G.element(i))) continue;
    gens.push_back(i);
    gen_perms.push_back(G.element(i));
    closure = PermGroup::generate(degree, gen_perms);
  }
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<int> value(order, 0);
    value[G.identity()] = 1;
    std::vector<int> queue{G.identity()};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const int g = queue[head];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const int h = G.mul(g, gens[k]);
        const int v = value[g] * ((mask >> k) & 1 ? -1 : 1);
        if (value[h] == 0) {
          value[h] = v;
          queue.push_back(h);
        } else if (value[h] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(value));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rackhopf

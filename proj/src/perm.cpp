#include "rackhopf/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "rackhopf/errors.hpp"

namespace rackhopf {

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm conjugate(const Perm& a, const Perm& b) { return compose(compose(a, b), inverse(a)); }

int sign(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int ord = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm p = identity_perm(degree);
  std::vector<int> cycle;
  bool open = false;
  auto close = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    cycle.clear();
  };
  std::vector<char> used(degree, 0);
  for (char c : text) {
    if (c == '(') {
      if (open) throw InvalidInput("nested '(' in cycle string '" + text + "'");
      open = true;
    } else if (c == ')') {
      if (!open) throw InvalidInput("unbalanced ')' in cycle string '" + text + "'");
      open = false;
      close();
    } else if (c >= '1' && c <= '9') {
      int v = c - '1';
      if (!open || v >= degree || used[v]) throw InvalidInput("bad point in cycle string '" + text + "'");
      used[v] = 1;
      cycle.push_back(v);
    } else if (c != ' ') {
      throw InvalidInput("unexpected character in cycle string '" + text + "'");
    }
  }
  if (open) throw InvalidInput("unterminated cycle in '" + text + "'");
  return p;
}

Perm transposition(int degree, int i, int j) {
  Perm p = identity_perm(degree);
  std::swap(p[i], p[j]);
  return p;
}

PermGroup PermGroup::generate(int degree, std::vector<Perm> generators, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  std::map<Perm, int> seen;
  std::deque<Perm> frontier;
  Perm id = identity_perm(degree);
  seen.emplace(id, 0);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Perm cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& s : g.generators_) {
      Perm next = compose(s, cur);
      if (seen.emplace(next, 0).second) {
        if (seen.size() > cap) throw ClosureBudgetExceeded(cap);
        frontier.push_back(std::move(next));
      }
    }
  }
  int i = 0;
  for (auto& [perm, idx] : seen) {
    idx = i++;
    g.elements_.push_back(perm);
  }
  g.index_ = std::move(seen);
  return g;
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return generate(n, std::move(gens));
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Perm> conjugacy_class(const PermGroup& group, const Perm& seed) {
  if (!group.contains(seed)) throw SeedNotInGroup();
  std::vector<Perm> cls;
  for (const Perm& g : group.elements()) cls.push_back(conjugate(g, seed));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  return cls;
}

FiniteGroup::FiniteGroup(PermGroup group) : group_(std::move(group)) {
  const int n = size();
  mul_.resize(static_cast<std::size_t>(n) * n);
  inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul_[static_cast<std::size_t>(a) * n + b] = group_.index_of(compose(element(a), element(b)));
    inv_[a] = group_.index_of(inverse(element(a)));
  }
  identity_ = group_.index_of(identity_perm(group_.degree()));
}

bool FiniteGroup::check_axioms() const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) return false;
    if (mul(a, inv(a)) != identity_) return false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

}  // namespace rackhopf

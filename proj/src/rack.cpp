#include "rackhopf/rack.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rackhopf/errors.hpp"

namespace rackhopf {

int Rack::find(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool Rack::is_quandle() const {
  for (int x = 0; x < n_; ++x)
    if (table_[x][x] != x) return false;
  return true;
}

Rack validate_rack(int n, std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  if (n < 1) throw InvalidInput("a rack needs at least one element");
  if (static_cast<int>(table.size()) != n) throw InvalidInput("rack table must have n rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("rack table must be n x n");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidInput("rack table entry out of range");
  }
  for (int x = 0; x < n; ++x)
    if (!is_permutation(table[x])) throw NotBijective(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[x][table[y][z]] != table[table[x][y]][table[x][z]]) throw NotSelfDistributive(x, y, z);
  if (labels.empty()) {
    for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  } else if (static_cast<int>(labels.size()) != n) {
    throw InvalidInput("rack labels must have n entries");
  }
  Rack r;
  r.n_ = n;
  r.labels_ = std::move(labels);
  r.table_ = std::move(table);
  return r;
}

RackProperties rack_properties(const Rack& rack) {
  RackProperties p;
  const int n = rack.size();
  std::set<std::vector<int>> rows(rack.table().begin(), rack.table().end());
  p.faithful = static_cast<int>(rows.size()) == n;
  p.quandle = rack.is_quandle();
  // Transitivity of the inner group: orbit of 0 under all phi_x.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    for (int x = 0; x < n; ++x) {
      int z = rack.op(x, y);
      if (!seen[z]) {
        seen[z] = 1;
        ++reached;
        stack.push_back(z);
      }
    }
  }
  p.indecomposable = reached == n;
  return p;
}

Rack conjugacy_rack(const PermGroup& group, const Perm& seed, std::vector<Perm>* perms) {
  std::vector<Perm> cls = conjugacy_class(group, seed);
  const int n = static_cast<int>(cls.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Perm c = conjugate(cls[x], cls[y]);
      table[x][y] = static_cast<int>(std::lower_bound(cls.begin(), cls.end(), c) - cls.begin());
    }
  std::vector<std::string> labels;
  for (const Perm& p : cls) labels.push_back(cycle_string(p));
  if (perms) *perms = cls;
  return validate_rack(n, std::move(table), std::move(labels));
}

InnerGroup inner_group(const Rack& rack, std::size_t cap) {
  const int n = rack.size();
  InnerGroup out;
  for (int x = 0; x < n && !out.violation; ++x)
    for (int y = 0; y < n; ++y) {
      Perm lhs = compose(rack.phi(x), rack.phi(y));
      Perm rhs = compose(rack.phi(rack.op(x, y)), rack.phi(x));
      if (lhs != rhs) {
        out.violation = std::make_pair(x, y);
        break;
      }
    }
  std::vector<Perm> gens;
  for (int x = 0; x < n; ++x) gens.push_back(rack.phi(x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  out.group = PermGroup::generate(n, std::move(gens), cap);
  return out;
}

bool check_enveloping_map(const Rack& rack, const PermGroup& target, const std::vector<Perm>& f) {
  const int n = rack.size();
  if (static_cast<int>(f.size()) != n) throw InvalidInput("enveloping map must be defined on every element");
  for (const Perm& p : f)
    if (!target.contains(p)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (compose(f[x], f[y]) != compose(f[rack.op(x, y)], f[x])) return false;
  return true;
}

Rack transposition_rack(int n, std::vector<Perm>* perms) {
  return conjugacy_rack(PermGroup::symmetric(n), transposition(n, 0, 1), perms);
}

Rack four_cycle_rack(std::vector<Perm>* perms) {
  return conjugacy_rack(PermGroup::symmetric(4), Perm{1, 2, 3, 0}, perms);
}

Rack trivial_rack(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (auto& row : t) std::iota(row.begin(), row.end(), 0);
  return validate_rack(n, std::move(t));
}

Rack dihedral_quandle(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x][y] = ((2 * x - y) % m + m) % m;
  return validate_rack(m, std::move(t));
}

Rack alexander_quandle(int m, int a) {
  if (std::gcd(a, m) != 1) throw InvalidInput("Alexander quandle needs a unit multiplier");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x][y] = (((a * y + (1 - a) * x) % m) + m) % m;
  return validate_rack(m, std::move(t));
}

Rack permutation_rack(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<int>> t(n, sigma);
  return validate_rack(n, std::move(t));
}

}  // namespace rackhopf

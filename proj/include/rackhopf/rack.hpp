#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackhopf/perm.hpp"

namespace rackhopf {

// A finite rack on {0..n-1}. table[x][y] = x ▷ y.
// Only validate_rack and the named constructors produce Rack values.
class Rack {
 public:
  int size() const { return n_; }
  int op(int x, int y) const { return table_[x][y]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  // Index of the element labelled `name`, or -1.
  int find(const std::string& name) const;
  // The translation y -> x ▷ y.
  const std::vector<int>& phi(int x) const { return table_[x]; }
  bool is_quandle() const;

  friend bool operator==(const Rack&, const Rack&) = default;

 private:
  friend Rack validate_rack(int n, std::vector<std::vector<int>> table, std::vector<std::string> labels);
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
};

// Throws NotBijective(x) / NotSelfDistributive(x,y,z) / InvalidInput for shape errors.
// Missing labels default to "0","1",...
Rack validate_rack(int n, std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

struct RackProperties {
  bool faithful = false;
  bool indecomposable = false;
  bool quandle = false;
};

RackProperties rack_properties(const Rack& rack);

// Conjugation rack on the class of `seed`, ordered lexicographically by permutation arrays and
// labelled in cycle notation. `perms`, when given, receives the underlying permutations.
Rack conjugacy_rack(const PermGroup& group, const Perm& seed, std::vector<Perm>* perms = nullptr);

struct InnerGroup {
  PermGroup group;
  // First (x, y) with phi_x phi_y != phi_{x▷y} phi_x; empty for every valid rack.
  std::optional<std::pair<int, int>> violation;
};

InnerGroup inner_group(const Rack& rack, std::size_t cap = kDefaultClosureCap);

// True iff f_x f_y = f_{x▷y} f_x for all x, y and every f_x lies in `target`.
bool check_enveloping_map(const Rack& rack, const PermGroup& target, const std::vector<Perm>& f);

// Named racks.
Rack transposition_rack(int n, std::vector<Perm>* perms = nullptr);  // O_2^n
Rack four_cycle_rack(std::vector<Perm>* perms = nullptr);            // O_4^4
Rack trivial_rack(int n);
Rack dihedral_quandle(int m);                      // x ▷ y = 2x - y mod m
Rack alexander_quandle(int m, int a);              // x ▷ y = a y + (1-a) x mod m, gcd(a,m)=1
Rack permutation_rack(const Perm& sigma);          // x ▷ y = sigma(y)

}  // namespace rackhopf

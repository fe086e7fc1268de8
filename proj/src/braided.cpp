#include "rackhopf/braided.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rackhopf/errors.hpp"

namespace rackhopf {

const char* flavor_name(Flavor f) { return f == Flavor::V ? "V" : "W"; }

Flavor parse_flavor(const std::string& s) {
  if (s == "V") return Flavor::V;
  if (s == "W") return Flavor::W;
  throw InvalidInput("flavor must be V or W, got '" + s + "'");
}

BraidedSpace make_braiding(const Cocycle2& q, Flavor flavor) {
  const Rack& r = q.rack();
  const int n = r.size();
  BraidedSpace c;
  c.dim = n;
  c.flavor = flavor;
  c.first.resize(static_cast<std::size_t>(n) * n);
  c.second.resize(c.first.size());
  c.coeff.resize(c.first.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t k = c.at(x, y);
      if (flavor == Flavor::V) {
        c.first[k] = r.op(x, y);
        c.second[k] = x;
        c.coeff[k] = q.q(x, y);
      } else {
        c.first[k] = y;
        c.second[k] = r.op(y, x);
        c.coeff[k] = q.q(y, x);
      }
    }
  return c;
}

namespace {

// Apply c to slots (i, i+1) of a basis word, accumulating the scalar.
inline void apply_slot(const BraidedSpace& c, std::vector<int>& w, int i, Rational& scalar) {
  const std::size_t k = c.at(w[i], w[i + 1]);
  scalar *= c.coeff[k];
  const int a = c.first[k], b = c.second[k];
  w[i] = a;
  w[i + 1] = b;
}

bool braid_row(const BraidedSpace& c, int x) {
  for (int y = 0; y < c.dim; ++y)
    for (int z = 0; z < c.dim; ++z) {
      std::vector<int> l{x, y, z}, r{x, y, z};
      Rational sl = 1, sr = 1;
      // (c⊗id)(id⊗c)(c⊗id): rightmost factor acts first.
      apply_slot(c, l, 0, sl);
      apply_slot(c, l, 1, sl);
      apply_slot(c, l, 0, sl);
      apply_slot(c, r, 1, sr);
      apply_slot(c, r, 0, sr);
      apply_slot(c, r, 1, sr);
      if (l != r || sl != sr) return false;
    }
  return true;
}

}  // namespace

bool check_braid_equation(const BraidedSpace& c, Exec exec) {
  const int n = c.dim;
  if (exec == Exec::Serial) {
    for (int x = 0; x < n; ++x)
      if (!braid_row(c, x)) return false;
    return true;
  }
  int failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (int x = 0; x < n; ++x) failures += braid_row(c, x) ? 0 : 1;
  return failures == 0;
}

RatMatrix braiding_matrix(const BraidedSpace& c) {
  const std::size_t d2 = static_cast<std::size_t>(c.dim) * c.dim;
  RatMatrix m(d2, d2);
  for (int x = 0; x < c.dim; ++x)
    for (int y = 0; y < c.dim; ++y) {
      const std::size_t k = c.at(x, y);
      m.add(c.at(c.first[k], c.second[k]), k, c.coeff[k]);
    }
  return m;
}

std::vector<int> reduced_word(const std::vector<int>& perm, ReducedWords method) {
  // Sorting by adjacent swaps of inversions: p s_{i1} ... s_{ik} = id, so p = s_{ik} ... s_{i1}.
  std::vector<int> p = perm, swaps;
  const int m = static_cast<int>(p.size());
  if (method == ReducedWords::Bubble) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i + 1 < m; ++i)
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          swaps.push_back(i + 1);
          changed = true;
        }
    }
  } else {
    // Move the smallest remaining value leftwards into place.
    for (int target = 0; target < m; ++target) {
      int pos = static_cast<int>(std::find(p.begin(), p.end(), target) - p.begin());
      for (; pos > target; --pos) {
        std::swap(p[pos - 1], p[pos]);
        swaps.push_back(pos);
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

namespace {

std::uint64_t checked_power(int base, int m, std::uint64_t budget) {
  std::uint64_t v = 1;
  for (int i = 0; i < m; ++i) {
    v *= static_cast<std::uint64_t>(base);
    if (v > budget) throw DegreeBudgetExceeded("dim^m exceeds the symmetrizer budget of " + std::to_string(budget));
  }
  return v;
}

std::vector<int> decode(std::uint64_t index, int dim, int m) {
  std::vector<int> w(m);
  for (int i = m - 1; i >= 0; --i) {
    w[i] = static_cast<int>(index % dim);
    index /= dim;
  }
  return w;
}

std::uint64_t encode(const std::vector<int>& w, int dim) {
  std::uint64_t v = 0;
  for (int x : w) v = v * dim + x;
  return v;
}

std::vector<std::vector<int>> all_reduced_words(int m, ReducedWords method) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(reduced_word(p, method));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Column of ς_m for input word `col`: sorted (row, coefficient) entries.
std::vector<std::pair<std::uint64_t, Rational>> symmetrizer_column(const BraidedSpace& c, int m, std::uint64_t col,
                                                                   const std::vector<std::vector<int>>& words) {
  std::map<std::uint64_t, Rational> acc;
  const std::vector<int> input = decode(col, c.dim, m);
  for (const auto& word : words) {
    std::vector<int> w = input;
    Rational s = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) apply_slot(c, w, *it - 1, s);
    acc[encode(w, c.dim)] += s;
  }
  std::vector<std::pair<std::uint64_t, Rational>> out;
  for (auto& [r, v] : acc)
    if (!is_zero(v)) out.emplace_back(r, std::move(v));
  return out;
}

}  // namespace

RatMatrix quantum_symmetrizer(const BraidedSpace& c, int m, Exec exec, ReducedWords method, std::uint64_t budget) {
  if (m < 1) throw InvalidInput("symmetrizer degree must be at least 1");
  const std::uint64_t size = checked_power(c.dim, m, budget);
  const auto words = all_reduced_words(m, method);
  std::vector<std::vector<std::pair<std::uint64_t, Rational>>> columns(size);
  const long n = static_cast<long>(size);
  if (exec == Exec::Serial) {
    for (long j = 0; j < n; ++j) columns[j] = symmetrizer_column(c, m, j, words);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long j = 0; j < n; ++j) columns[j] = symmetrizer_column(c, m, j, words);
  }
  RatMatrix out(size, size);
  for (std::uint64_t j = 0; j < size; ++j)
    for (const auto& [r, v] : columns[j]) out.set(r, j, v);
  return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::size_t symmetrizer_rank(const BraidedSpace& c, int m, Exec exec, std::uint64_t budget) {
  if (m < 1) throw InvalidInput("symmetrizer degree must be at least 1");
  const std::uint64_t size = checked_power(c.dim, m, budget);
  if (m == 1) return static_cast<std::size_t>(c.dim);
  // Orbits of basis words under the generators c_i; ς_m preserves the span of each orbit.
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::uint64_t j = 0; j < size; ++j) {
    const auto w = decode(j, c.dim, m);
    for (int i = 0; i + 1 < m; ++i) {
      auto v = w;
      Rational s = 1;
      apply_slot(c, v, i, s);
      int a = find_root(parent, static_cast<int>(j)), b = find_root(parent, static_cast<int>(encode(v, c.dim)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<std::uint64_t>> blocks;
  for (std::uint64_t j = 0; j < size; ++j) blocks[find_root(parent, static_cast<int>(j))].push_back(j);
  std::vector<std::vector<std::uint64_t>> block_list;
  for (auto& [root, members] : blocks) block_list.push_back(std::move(members));

  const auto words = all_reduced_words(m, ReducedWords::Bubble);
  auto block_rank = [&](const std::vector<std::uint64_t>& members) {
    std::map<std::uint64_t, std::size_t> pos;
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
    // Rows of the transposed block: rank is unchanged.
    std::vector<RatVector> rows(members.size(), RatVector(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto& [r, v] : symmetrizer_column(c, m, members[i], words)) rows[i][pos.at(r)] = v;
    return rank(RatMatrix::from_dense(rows));
  };
  const long nb = static_cast<long>(block_list.size());
  std::vector<std::size_t> ranks(nb);
  if (exec == Exec::Serial) {
    for (long b = 0; b < nb; ++b) ranks[b] = block_rank(block_list[b]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < nb; ++b) ranks[b] = block_rank(block_list[b]);
  }
  return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
}

NicholsDims nichols_dim_oracle(const BraidedSpace& c, int max_deg, Exec exec, std::uint64_t budget) {
  NicholsDims out;
  out.dims.push_back(1);
  out.total = 1;
  out.truncated = true;
  for (int m = 1; m <= max_deg; ++m) {
    std::size_t r = symmetrizer_rank(c, m, exec, budget);
    out.dims.push_back(r);
    out.total += r;
    if (r == 0) {
      out.truncated = false;
      break;
    }
  }
  return out;
}

}  // namespace rackhopf

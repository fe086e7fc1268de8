#include "rackhopf/smash.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <random>

#include "rackhopf/errors.hpp"

namespace rackhopf {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, scale * b[j].second});
      ++j;
    } else {
      Rational c = a[i].second + scale * b[j].second;
      if (!is_zero(c)) out.push_back({a[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

SparseVec scaled(const SparseVec& v, const Rational& c) {
  if (is_zero(c)) return {};
  SparseVec out = v;
  for (auto& t : out) t.second *= c;
  return out;
}

SparseVec from_map(const std::map<int, Rational>& m) {
  SparseVec out;
  for (const auto& [k, v] : m)
    if (!is_zero(v)) out.push_back({k, v});
  return out;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(int dim, std::vector<SparseVec> table, SparseVec unit, std::vector<std::string> names)
    : dim_(dim), table_(std::move(table)), unit_(std::move(unit)), names_(std::move(names)) {
  if (dim <= 0) throw InvalidInput("algebra dimension must be positive");
  if (table_.size() != static_cast<std::size_t>(dim) * dim) throw InvalidInput("structure table has the wrong size");
  if (names_.size() != static_cast<std::size_t>(dim)) throw InvalidInput("one name per basis element is required");
  for (const auto& v : table_)
    for (const auto& [k, c] : v)
      if (k < 0 || k >= dim) throw InvalidInput("structure constant index out of range");
}

SparseVec FiniteAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  std::map<int, Rational> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      for (const auto& [k, z] : product(i, j)) acc[k] += x * y * z;
  return from_map(acc);
}

FiniteAlgebra ground_field() { return FiniteAlgebra(1, {{{0, 1}}}, {{0, 1}}, {"1"}); }

FiniteAlgebra exterior_algebra(int n) {
  if (n < 0 || n > 12) throw InvalidInput("exterior algebra rank must be in [0, 12]");
  const int dim = 1 << n;
  std::vector<SparseVec> table(static_cast<std::size_t>(dim) * dim);
  std::vector<std::string> names;
  for (int s = 0; s < dim; ++s) {
    std::string name;
    for (int b = 0; b < n; ++b)
      if (s >> b & 1) name += (name.empty() ? "e" : "^e") + std::to_string(b + 1);
    names.push_back(name.empty() ? "1" : name);
    for (int t = 0; t < dim; ++t) {
      if (s & t) continue;
      // Sign of merging the sorted factors: one transposition per (b in s, c in t) with b > c.
      int inversions = 0;
      for (int b = 0; b < n; ++b)
        if (s >> b & 1) inversions += std::popcount(static_cast<unsigned>(t & ((1 << b) - 1)));
      table[static_cast<std::size_t>(s) * dim + t] = {{s | t, inversions % 2 ? -1 : 1}};
    }
  }
  return FiniteAlgebra(dim, std::move(table), {{0, 1}}, std::move(names));
}

FiniteAlgebra quotient_algebra(const GroebnerBasis& gb, const std::vector<std::string>& generator_names,
                               std::vector<Word>* words_out) {
  std::vector<Word> words = normal_words(gb);
  if (words.empty()) throw InvalidInput("the quotient is zero");
  std::map<Word, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  const int dim = static_cast<int>(words.size());
  std::vector<FreePoly> products;
  products.reserve(static_cast<std::size_t>(dim) * dim);
  for (const auto& a : words)
    for (const auto& b : words) products.push_back(FreePoly::monomial(gb.alphabet(), a + b));
  products = batch_normal_form(products, gb);
  std::vector<SparseVec> table(products.size());
  for (std::size_t p = 0; p < products.size(); ++p) {
    for (const auto& t : products[p].terms()) table[p].push_back({index.at(t.word), t.coeff});
    std::sort(table[p].begin(), table[p].end());
  }
  std::vector<std::string> names;
  for (const auto& w : words) names.push_back(w.empty() ? "1" : word_to_string(w, generator_names));
  if (words_out) *words_out = words;
  return FiniteAlgebra(dim, std::move(table), {{index.at(Word{}), 1}}, std::move(names));
}

ModuleAlgebraAction group_action(const FiniteAlgebra& a, const FiniteGroup& g,
                                 const std::function<SparseVec(int h, int i)>& image) {
  ModuleAlgebraAction out{HopfAlgebra(g, HopfKind::GroupAlgebra), {}};
  out.act.assign(g.size(), std::vector<SparseVec>(a.dim()));
  for (int h = 0; h < g.size(); ++h)
    for (int i = 0; i < a.dim(); ++i) out.act[h][i] = image(h, i);
  return out;
}

ModuleAlgebraAction grading_action(const FiniteAlgebra& a, const FiniteGroup& g, const std::vector<int>& degree) {
  if (static_cast<int>(degree.size()) != a.dim()) throw InvalidInput("one degree per basis element is required");
  ModuleAlgebraAction out{HopfAlgebra(g, HopfKind::FunctionAlgebra), {}};
  out.act.assign(g.size(), std::vector<SparseVec>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    if (degree[i] < 0 || degree[i] >= g.size()) throw InvalidInput("degree outside the group");
    out.act[degree[i]][i] = {{i, 1}};
  }
  return out;
}

ModuleAlgebraAction letter_action_on_quotient(const GroebnerBasis& gb, const std::vector<Word>& words,
                                              const FiniteGroup& g,
                                              const std::function<std::pair<int, Rational>(int h, int letter)>& image) {
  std::map<Word, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  ModuleAlgebraAction out{HopfAlgebra(g, HopfKind::GroupAlgebra), {}};
  out.act.assign(g.size(), std::vector<SparseVec>(words.size()));
  for (int h = 0; h < g.size(); ++h)
    for (std::size_t i = 0; i < words.size(); ++i) {
      Word w;
      Rational c = 1;
      for (std::size_t k = 0; k < words[i].size(); ++k) {
        auto [l, s] = image(h, letter(words[i], k));
        w.push_back(static_cast<char>(l));
        c *= s;
      }
      FreePoly nf = gb.normal_form(FreePoly::monomial(gb.alphabet(), w, c));
      SparseVec v;
      for (const auto& t : nf.terms()) v.push_back({index.at(t.word), t.coeff});
      std::sort(v.begin(), v.end());
      out.act[h][i] = std::move(v);
    }
  return out;
}

namespace {

SparseVec apply(const ModuleAlgebraAction& action, int h, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v) out = sparse_add(out, action.act[h][i], c);
  return out;
}

}  // namespace

void check_module_algebra(const FiniteAlgebra& a, const ModuleAlgebraAction& action) {
  const HopfAlgebra& H = action.hopf;
  if (static_cast<int>(action.act.size()) != H.dim()) throw InvalidInput("action needs one row per basis element of H");
  for (const auto& row : action.act)
    if (static_cast<int>(row.size()) != a.dim()) throw InvalidInput("action row has the wrong size");
  // Module axioms: 1_H acts trivially and (b_h b_k)·a = b_h·(b_k·a).
  const HopfElement one = H.unit();
  for (int i = 0; i < a.dim(); ++i) {
    SparseVec v;
    for (int h = 0; h < H.dim(); ++h)
      if (!is_zero(one[h])) v = sparse_add(v, action.act[h][i], one[h]);
    if (v != SparseVec{{i, 1}}) throw NotModuleAlgebra("the unit of H does not act trivially on " + a.names()[i]);
  }
  for (int h = 0; h < H.dim(); ++h)
    for (int k = 0; k < H.dim(); ++k) {
      const HopfElement hk = H.mul(H.basis(h), H.basis(k));
      for (int i = 0; i < a.dim(); ++i) {
        SparseVec lhs;
        for (int m = 0; m < H.dim(); ++m)
          if (!is_zero(hk[m])) lhs = sparse_add(lhs, action.act[m][i], hk[m]);
        if (lhs != apply(action, h, action.act[k][i]))
          throw NotModuleAlgebra("not a module at (" + H.group().label(h) + ", " + H.group().label(k) + ", " +
                                 a.names()[i] + ")");
      }
    }
  for (int h = 0; h < H.dim(); ++h) {
    if (apply(action, h, a.unit()) != scaled(a.unit(), H.counit(H.basis(h))))
      throw NotModuleAlgebra("b_" + H.group().label(h) + " does not act on 1 by its counit");
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        SparseVec lhs = apply(action, h, a.product(i, j)), rhs;
        for (auto [u, v] : H.coproduct(h)) {
          if (action.act[u][i].empty() || action.act[v][j].empty()) continue;
          rhs = sparse_add(rhs, a.mul(action.act[u][i], action.act[v][j]));
        }
        if (lhs != rhs)
          throw NotModuleAlgebra("action is not multiplicative at (" + H.group().label(h) + ", " + a.names()[i] +
                                 ", " + a.names()[j] + ")");
      }
  }
}

FiniteAlgebra smash_product(const FiniteAlgebra& a, const ModuleAlgebraAction& action) {
  check_module_algebra(a, action);
  const HopfAlgebra& H = action.hopf;
  const int da = a.dim(), dh = H.dim(), dim = da * dh;
  std::vector<SparseVec> table(static_cast<std::size_t>(dim) * dim);
  std::vector<SparseVec> hprod(static_cast<std::size_t>(dh) * dh);
  for (int v = 0; v < dh; ++v)
    for (int k = 0; k < dh; ++k) {
      const HopfElement p = H.mul(H.basis(v), H.basis(k));
      for (int m = 0; m < dh; ++m)
        if (!is_zero(p[m])) hprod[static_cast<std::size_t>(v) * dh + k].push_back({m, p[m]});
    }
  for (int i = 0; i < da; ++i)
    for (int h = 0; h < dh; ++h)
      for (int j = 0; j < da; ++j) {
        std::vector<std::map<int, Rational>> acc(static_cast<std::size_t>(dh));
        for (auto [u, v] : H.coproduct(h)) {
          if (action.act[u][j].empty()) continue;
          const SparseVec left = a.mul({{i, 1}}, action.act[u][j]);
          for (int h2 = 0; h2 < dh; ++h2)
            for (const auto& [m, c2] : hprod[static_cast<std::size_t>(v) * dh + h2])
              for (const auto& [l, c] : left) acc[h2][l * dh + m] += c * c2;
        }
        for (int h2 = 0; h2 < dh; ++h2)
          table[static_cast<std::size_t>(i * dh + h) * dim + (j * dh + h2)] = from_map(acc[h2]);
      }
  SparseVec unit;
  const HopfElement one = H.unit();
  for (const auto& [l, c] : a.unit())
    for (int k = 0; k < dh; ++k)
      if (!is_zero(one[k])) unit.push_back({l * dh + k, c * one[k]});
  std::sort(unit.begin(), unit.end());
  std::vector<std::string> names;
  const std::string tag = H.kind() == HopfKind::GroupAlgebra ? "" : "d";
  for (int i = 0; i < da; ++i)
    for (int h = 0; h < dh; ++h) names.push_back(a.names()[i] + "#" + tag + H.group().label(h));
  return FiniteAlgebra(dim, std::move(table), std::move(unit), std::move(names));
}

namespace {

std::string triple_text(const FiniteAlgebra& a, int i, int j, int k) {
  return "(" + a.names()[i] + ", " + a.names()[j] + ", " + a.names()[k] + ")";
}

// Integer tables for algebras whose basis products are c·b_l with small integer c (or zero).
struct MonomialTables {
  std::vector<std::int32_t> target;  // -1 for zero
  std::vector<std::int64_t> coeff;
};

std::optional<MonomialTables> monomial_tables(const FiniteAlgebra& a) {
  const std::size_t n = static_cast<std::size_t>(a.dim());
  MonomialTables t;
  t.target.assign(n * n, -1);
  t.coeff.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& p = a.product(static_cast<int>(i), static_cast<int>(j));
      if (p.empty()) continue;
      if (p.size() > 1 || p[0].second.get_den() != 1 || !p[0].second.get_num().fits_sint_p()) return std::nullopt;
      const long c = p[0].second.get_num().get_si();
      if (c > (1 << 20) || c < -(1 << 20)) return std::nullopt;
      t.target[i * n + j] = p[0].first;
      t.coeff[i * n + j] = c;
    }
  return t;
}

void audit_row_monomial(const MonomialTables& t, int n, int i, AssociativityAudit& out, const FiniteAlgebra& a) {
  const std::size_t N = static_cast<std::size_t>(n);
  for (int j = 0; j < n; ++j) {
    const std::int32_t ij = t.target[i * N + j];
    const std::int64_t cij = t.coeff[i * N + j];
    for (int k = 0; k < n; ++k) {
      std::int32_t left = -1, right = -1;
      std::int64_t lc = 0, rc = 0;
      if (ij >= 0) {
        left = t.target[ij * N + k];
        lc = left >= 0 ? cij * t.coeff[ij * N + k] : 0;
      }
      const std::int32_t jk = t.target[j * N + k];
      if (jk >= 0) {
        right = t.target[i * N + jk];
        rc = right >= 0 ? t.coeff[j * N + k] * t.coeff[i * N + jk] : 0;
      }
      if (lc == 0) left = -1;
      if (rc == 0) right = -1;
      ++out.triples;
      if (left != right || lc != rc) {
        ++out.failures;
        if (out.witness.empty()) out.witness = triple_text(a, i, j, k);
      }
    }
  }
}

void audit_row_rational(const FiniteAlgebra& a, int i, AssociativityAudit& out) {
  const int n = a.dim();
  for (int j = 0; j < n; ++j) {
    const SparseVec& ij = a.product(i, j);
    for (int k = 0; k < n; ++k) {
      SparseVec left, right;
      for (const auto& [l, c] : ij) left = sparse_add(left, a.product(l, k), c);
      for (const auto& [l, c] : a.product(j, k)) right = sparse_add(right, a.product(i, l), c);
      ++out.triples;
      if (left != right) {
        ++out.failures;
        if (out.witness.empty()) out.witness = triple_text(a, i, j, k);
      }
    }
  }
}

}  // namespace

AssociativityAudit associativity_audit(const FiniteAlgebra& a, Exec exec) {
  const int n = a.dim();
  auto tables = monomial_tables(a);
  std::vector<AssociativityAudit> rows(static_cast<std::size_t>(n));
  auto row = [&](int i) {
    if (tables)
      audit_row_monomial(*tables, n, i, rows[i], a);
    else
      audit_row_rational(a, i, rows[i]);
  };
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) row(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) row(i);
  }
  AssociativityAudit out;
  out.monomial_fast_path = tables.has_value();
  for (auto& r : rows) {
    out.triples += r.triples;
    out.failures += r.failures;
    if (out.witness.empty()) out.witness = std::move(r.witness);
  }
  return out;
}

AssociativityAudit associativity_audit_sampled(const FiniteAlgebra& a, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 e(seed);
  const auto n = static_cast<std::uint64_t>(a.dim());
  AssociativityAudit out;
  for (std::size_t s = 0; s < samples; ++s) {
    const int i = static_cast<int>(e() % n), j = static_cast<int>(e() % n), k = static_cast<int>(e() % n);
    SparseVec left, right;
    for (const auto& [l, c] : a.product(i, j)) left = sparse_add(left, a.product(l, k), c);
    for (const auto& [l, c] : a.product(j, k)) right = sparse_add(right, a.product(i, l), c);
    ++out.triples;
    if (left != right) {
      ++out.failures;
      if (out.witness.empty()) out.witness = triple_text(a, i, j, k);
    }
  }
  return out;
}

}  // namespace rackhopf

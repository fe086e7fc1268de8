#include "rackhopf/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "rackhopf/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rackhopf {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

using TermMap = std::map<Word, Rational, DeglexGreater>;

// Trie over leading words supporting insertion and removal.
class LeadIndex {
 public:
  explicit LeadIndex(int alphabet) : alphabet_(alphabet) { new_node(); }

  void insert(const Word& w, int element) {
    int node = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int& c = child_[static_cast<std::size_t>(node) * alphabet_ + letter(w, i)];
      if (c < 0) {
        int fresh = new_node();
        child_[static_cast<std::size_t>(node) * alphabet_ + letter(w, i)] = fresh;
        node = fresh;
      } else {
        node = c;
      }
    }
    terminal_[node] = element;
  }

  void erase(const Word& w) {
    int node = 0;
    for (std::size_t i = 0; i < w.size() && node >= 0; ++i)
      node = child_[static_cast<std::size_t>(node) * alphabet_ + letter(w, i)];
    if (node >= 0) terminal_[node] = -1;
  }

  // Leftmost occurrence of any indexed word inside w, as (element, start position).
  bool find(const Word& w, int& element, std::size_t& position) const {
    for (std::size_t start = 0; start <= w.size(); ++start) {
      int node = 0;
      if (terminal_[0] >= 0) {
        element = terminal_[0];
        position = start;
        return true;
      }
      for (std::size_t j = start; j < w.size(); ++j) {
        node = child_[static_cast<std::size_t>(node) * alphabet_ + letter(w, j)];
        if (node < 0) break;
        if (terminal_[node] >= 0) {
          element = terminal_[node];
          position = start;
          return true;
        }
      }
    }
    return false;
  }

  const std::vector<int>& children() const { return child_; }
  const std::vector<int>& terminals() const { return terminal_; }

 private:
  int new_node() {
    child_.insert(child_.end(), alphabet_, -1);
    terminal_.push_back(-1);
    return static_cast<int>(terminal_.size()) - 1;
  }
  int alphabet_;
  std::vector<int> child_;
  std::vector<int> terminal_;
};

// Full reduction of p against monic polynomials addressed through `element`.
template <class Index, class ElementAt>
std::vector<Term> reduce_terms(const std::vector<Term>& input, const Index& index, ElementAt&& element) {
  TermMap work;
  for (const auto& t : input) work.emplace(t.word, t.coeff);
  std::vector<Term> result;
  Rational scaled;
  while (!work.empty()) {
    auto it = work.begin();
    int e;
    std::size_t pos;
    if (!index.find(it->first, e, pos)) {
      result.push_back({it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    const FreePoly& g = element(e);
    const std::size_t lead_len = g.leading_word().size();
    const Word prefix = it->first.substr(0, pos);
    const Word suffix = it->first.substr(pos + lead_len);
    const Rational c = std::move(it->second);
    work.erase(it);
    const auto& gt = g.terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      auto [jt, inserted] = work.try_emplace(prefix + gt[k].word + suffix);
      mpq_mul(scaled.get_mpq_t(), c.get_mpq_t(), gt[k].coeff.get_mpq_t());
      jt->second -= scaled;
      if (is_zero(jt->second)) work.erase(jt);
    }
  }
  return result;
}

struct Obstruction {
  std::size_t degree;
  std::uint64_t seq;
  int left, right;
  std::size_t overlap;
};

struct ObstructionAfter {
  bool operator()(const Obstruction& a, const Obstruction& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.seq > b.seq;
  }
};

FreePoly s_element(const FreePoly& f, const FreePoly& g, std::size_t overlap) {
  const Word& a = f.leading_word();
  const Word& b = g.leading_word();
  return f.sandwich(Word{}, b.substr(overlap)) - g.sandwich(a.substr(0, a.size() - overlap), Word{});
}

// Proper overlaps: a nonempty suffix of a equal to a prefix of b, shorter than both words.
template <class Fn>
void for_each_overlap(const Word& a, const Word& b, Fn&& fn) {
  const std::size_t limit = std::min(a.size(), b.size());
  for (std::size_t k = 1; k < limit; ++k)
    if (a.compare(a.size() - k, k, b, 0, k) == 0) fn(k);
}

class Completion {
 public:
  Completion(int alphabet, GroebnerOptions options) : alphabet_(alphabet), options_(options), index_(alphabet) {}

  GroebnerBasis run(const std::vector<FreePoly>& generators) {
    for (const auto& g : generators) {
      if (g.alphabet() != alphabet_) throw InvalidInput("generator over a different alphabet");
      insert(g);
      if (trivial_) return trivial_basis();
    }
    while (!queue_.empty()) {
      Obstruction ob = queue_.top();
      queue_.pop();
      if (!alive_[ob.left] || !alive_[ob.right]) continue;
      if (ob.degree > static_cast<std::size_t>(options_.max_degree)) {
        ++stats_.obstructions_skipped;
        truncated_ = options_.max_degree;
        continue;
      }
      ++stats_.obstructions_processed;
      FreePoly s = s_element(polys_[ob.left], polys_[ob.right], ob.overlap);
      FreePoly r = reduce(s);
      if (r.is_zero()) {
        ++stats_.reductions_to_zero;
        continue;
      }
      insert(std::move(r));
      if (trivial_) return trivial_basis();
    }
    return finish();
  }

 private:
  FreePoly reduce(const FreePoly& p) const {
    return FreePoly(alphabet_, reduce_terms(p.terms(), index_, [this](int e) -> const FreePoly& { return polys_[e]; }));
  }

  void insert(FreePoly first) {
    std::vector<FreePoly> pending{std::move(first)};
    while (!pending.empty()) {
      FreePoly p = reduce(pending.back());
      pending.pop_back();
      if (p.is_zero()) continue;
      p = p.monic();
      if (p.is_constant()) {
        trivial_ = true;
        return;
      }
      const Word lead = p.leading_word();
      for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (!alive_[i] || polys_[i].leading_word().find(lead) == Word::npos) continue;
        alive_[i] = 0;
        --alive_count_;
        index_.erase(polys_[i].leading_word());
        pending.push_back(polys_[i]);
      }
      const int id = static_cast<int>(polys_.size());
      polys_.push_back(std::move(p));
      alive_.push_back(1);
      ++alive_count_;
      ++stats_.insertions;
      index_.insert(lead, id);
      if (alive_count_ > options_.max_basis)
        throw ResourceBudgetExceeded("Groebner basis exceeded " + std::to_string(options_.max_basis) + " elements");
      for (int j = 0; j <= id; ++j) {
        if (!alive_[j]) continue;
        queue_overlaps(id, j);
        if (j != id) queue_overlaps(j, id);
      }
    }
  }

  void queue_overlaps(int left, int right) {
    const Word& a = polys_[left].leading_word();
    const Word& b = polys_[right].leading_word();
    for_each_overlap(a, b, [&](std::size_t k) {
      queue_.push(Obstruction{a.size() + b.size() - k, seq_++, left, right, k});
    });
  }

  GroebnerBasis trivial_basis() const {
    return GroebnerBasis(alphabet_, {FreePoly::constant(alphabet_, 1)}, std::nullopt, stats_);
  }

  GroebnerBasis finish() {
    std::vector<FreePoly> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!alive_[i]) continue;
      const auto& t = polys_[i].terms();
      std::vector<Term> tail(t.begin() + 1, t.end());
      std::vector<Term> reduced = reduce_terms(tail, index_, [this](int e) -> const FreePoly& { return polys_[e]; });
      reduced.insert(reduced.begin(), t.front());
      out.emplace_back(alphabet_, std::move(reduced));
    }
    std::sort(out.begin(), out.end(),
              [](const FreePoly& a, const FreePoly& b) { return deglex_less(a.leading_word(), b.leading_word()); });
    return GroebnerBasis(alphabet_, std::move(out), truncated_, stats_);
  }

  int alphabet_;
  GroebnerOptions options_;
  LeadIndex index_;
  std::vector<FreePoly> polys_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::priority_queue<Obstruction, std::vector<Obstruction>, ObstructionAfter> queue_;
  std::uint64_t seq_ = 0;
  std::optional<int> truncated_;
  bool trivial_ = false;
  GroebnerStats stats_;
};

}  // namespace

// ---------------------------------------------------------------------------------------------

AvoidanceAutomaton::AvoidanceAutomaton(int alphabet, const std::vector<Word>& patterns) : alphabet_(alphabet) {
  std::vector<int> child(alphabet, -1);
  std::vector<char> terminal(1, 0);
  for (const Word& w : patterns) {
    int node = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t slot = static_cast<std::size_t>(node) * alphabet + letter(w, i);
      if (child[slot] < 0) {
        child[slot] = static_cast<int>(terminal.size());
        terminal.push_back(0);
        child.insert(child.end(), alphabet, -1);
      }
      node = child[slot];
    }
    terminal[node] = 1;
  }
  const int n = static_cast<int>(terminal.size());
  goto_.assign(static_cast<std::size_t>(n) * alphabet, 0);
  dead_.assign(n, 0);
  std::vector<int> fail(n, 0);
  std::deque<int> bfs;
  dead_[0] = terminal[0];
  for (int a = 0; a < alphabet; ++a) {
    int c = child[a];
    if (c >= 0) {
      fail[c] = 0;
      goto_[a] = c;
      bfs.push_back(c);
    } else {
      goto_[a] = 0;
    }
  }
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop_front();
    dead_[s] = terminal[s] || dead_[fail[s]];
    for (int a = 0; a < alphabet; ++a) {
      int c = child[static_cast<std::size_t>(s) * alphabet + a];
      if (c >= 0) {
        fail[c] = goto_[static_cast<std::size_t>(fail[s]) * alphabet + a];
        goto_[static_cast<std::size_t>(s) * alphabet + a] = c;
        bfs.push_back(c);
      } else {
        goto_[static_cast<std::size_t>(s) * alphabet + a] = goto_[static_cast<std::size_t>(fail[s]) * alphabet + a];
      }
    }
  }
}

bool AvoidanceAutomaton::has_live_cycle() const {
  if (dead(0)) return false;
  // Iterative three-colour DFS over live states.
  std::vector<char> colour(states(), 0);
  std::vector<std::pair<int, int>> stack{{0, 0}};
  colour[0] = 1;
  while (!stack.empty()) {
    auto& [s, a] = stack.back();
    if (a == alphabet_) {
      colour[s] = 2;
      stack.pop_back();
      continue;
    }
    int t = next(s, a++);
    if (dead(t)) continue;
    if (colour[t] == 1) return true;
    if (colour[t] == 0) {
      colour[t] = 1;
      stack.emplace_back(t, 0);
    }
  }
  return false;
}

GroebnerBasis::GroebnerBasis(int alphabet, std::vector<FreePoly> elements, std::optional<int> truncated_at,
                             GroebnerStats stats)
    : alphabet_(alphabet), elements_(std::move(elements)), truncated_at_(truncated_at), stats_(stats) {
  LeadIndex index(alphabet_);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].is_zero()) throw InvalidInput("zero element in a Groebner basis");
    if (elements_[i].leading_coeff() != 1) throw InvalidInput("Groebner basis elements must be monic");
    index.insert(elements_[i].leading_word(), static_cast<int>(i));
  }
  trie_child_ = index.children();
  trie_terminal_ = index.terminals();
}

std::optional<GroebnerBasis::Match> GroebnerBasis::find_divisor(const Word& w) const {
  for (std::size_t start = 0; start <= w.size(); ++start) {
    int node = 0;
    if (trie_terminal_[0] >= 0) return Match{trie_terminal_[0], start};
    for (std::size_t j = start; j < w.size(); ++j) {
      node = trie_child_[static_cast<std::size_t>(node) * alphabet_ + letter(w, j)];
      if (node < 0) break;
      if (trie_terminal_[node] >= 0) return Match{trie_terminal_[node], start};
    }
  }
  return std::nullopt;
}

bool GroebnerBasis::is_normal_word(const Word& w) const { return !find_divisor(w).has_value(); }

FreePoly GroebnerBasis::normal_form(const FreePoly& p) const {
  if (p.alphabet() != alphabet_) throw InvalidInput("normal form over a different alphabet");
  struct View {
    const GroebnerBasis* gb;
    bool find(const Word& w, int& e, std::size_t& pos) const {
      auto m = gb->find_divisor(w);
      if (!m) return false;
      e = m->element;
      pos = m->position;
      return true;
    }
  } view{this};
  return FreePoly(alphabet_, reduce_terms(p.terms(), view, [this](int e) -> const FreePoly& { return elements_[e]; }));
}

GroebnerBasis groebner(const std::vector<FreePoly>& generators, int alphabet, GroebnerOptions options) {
  return Completion(alphabet, options).run(generators);
}

FreePoly normal_form(const FreePoly& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

std::vector<FreePoly> batch_normal_form(const std::vector<FreePoly>& polys, const GroebnerBasis& gb, Exec exec) {
  std::vector<FreePoly> out(polys.size());
  const long n = static_cast<long>(polys.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) out[i] = gb.normal_form(polys[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = gb.normal_form(polys[i]);
  return out;
}

std::string QuotientDim::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "infinite";
    case Kind::UnknownTruncated: return "unknown (truncated)";
  }
  return "";
}

namespace {

std::vector<Word> leading_words(const GroebnerBasis& gb) {
  std::vector<Word> out;
  for (const auto& e : gb.elements()) out.push_back(e.leading_word());
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceBudgetExceeded("normal word count overflows 64 bits");
  return r;
}

}  // namespace

QuotientDim quotient_dim(const GroebnerBasis& gb) {
  if (!gb.complete()) return {QuotientDim::Kind::UnknownTruncated, 0};
  AvoidanceAutomaton aut(gb.alphabet(), leading_words(gb));
  if (aut.dead(0)) return {QuotientDim::Kind::Finite, 0};
  if (aut.has_live_cycle()) return {QuotientDim::Kind::Infinite, 0};
  // Paths from each live state in the acyclic live subgraph, memoised in post-order.
  std::vector<std::uint64_t> paths(aut.states(), 0);
  std::vector<char> done(aut.states(), 0);
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [s, a] = stack.back();
    if (a == aut.alphabet()) {
      std::uint64_t total = 1;
      for (int b = 0; b < aut.alphabet(); ++b) {
        int t = aut.next(s, b);
        if (!aut.dead(t)) total = checked_add(total, paths[t]);
      }
      paths[s] = total;
      done[s] = 1;
      stack.pop_back();
      continue;
    }
    int t = aut.next(s, a++);
    if (!aut.dead(t) && !done[t]) stack.emplace_back(t, 0);
  }
  return {QuotientDim::Kind::Finite, paths[0]};
}

std::vector<std::uint64_t> hilbert_series(const GroebnerBasis& gb, int up_to) {
  AvoidanceAutomaton aut(gb.alphabet(), leading_words(gb));
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> cur(aut.states(), 0), nxt(aut.states(), 0);
  if (!aut.dead(0)) cur[0] = 1;
  for (int d = 0; d <= up_to; ++d) {
    std::uint64_t total = 0;
    for (std::uint64_t c : cur) total = checked_add(total, c);
    out.push_back(total);
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int s = 0; s < aut.states(); ++s) {
      if (!cur[s]) continue;
      for (int a = 0; a < aut.alphabet(); ++a) {
        int t = aut.next(s, a);
        if (!aut.dead(t)) nxt[t] = checked_add(nxt[t], cur[s]);
      }
    }
    std::swap(cur, nxt);
  }
  return out;
}

std::vector<Word> normal_words(const GroebnerBasis& gb, std::size_t cap) {
  QuotientDim qd = quotient_dim(gb);
  if (qd.kind != QuotientDim::Kind::Finite) throw InvalidInput("normal words requested for a quotient of unknown or infinite dimension");
  if (qd.value > cap) throw ResourceBudgetExceeded("quotient dimension exceeds the normal-word cap");
  AvoidanceAutomaton aut(gb.alphabet(), leading_words(gb));
  std::vector<Word> out;
  if (aut.dead(0)) return out;
  // Breadth-first by length; within a length, letters ascend, giving deglex order.
  std::vector<std::pair<Word, int>> layer{{Word{}, 0}};
  while (!layer.empty()) {
    std::vector<std::pair<Word, int>> next;
    for (auto& [w, s] : layer) {
      out.push_back(w);
      for (int a = 0; a < aut.alphabet(); ++a) {
        int t = aut.next(s, a);
        if (!aut.dead(t)) next.emplace_back(w + static_cast<char>(a), t);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

TrivialityReport is_trivial_quotient(const GroebnerBasis& gb) {
  for (const auto& e : gb.elements())
    if (e.is_constant()) return {true, true};
  return {false, gb.complete()};
}

ObstructionAudit audit_obstructions(const GroebnerBasis& gb, Exec exec) {
  const auto& el = gb.elements();
  const long n = static_cast<long>(el.size());
  const std::size_t cutoff = gb.truncated_at() ? static_cast<std::size_t>(*gb.truncated_at()) : SIZE_MAX;
  ObstructionAudit audit;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j && el[j].leading_word().find(el[i].leading_word()) != Word::npos) audit.interreduced = false;

  auto audit_row = [&](long i, std::size_t& checked, std::size_t& failures) {
    for (long j = 0; j < n; ++j) {
      const Word& a = el[i].leading_word();
      const Word& b = el[j].leading_word();
      for_each_overlap(a, b, [&](std::size_t k) {
        if (a.size() + b.size() - k > cutoff) return;
        ++checked;
        if (!gb.normal_form(s_element(el[i], el[j], k)).is_zero()) ++failures;
      });
    }
  };
  std::size_t checked = 0, failures = 0;
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) audit_row(i, checked, failures);
  } else {
#pragma omp parallel for schedule(dynamic) reduction(+ : checked, failures)
    for (long i = 0; i < n; ++i) audit_row(i, checked, failures);
  }
  audit.checked = checked;
  audit.failures = failures;
  return audit;
}

}  // namespace rackhopf

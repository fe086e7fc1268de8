#include "rackhopf/deform.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <set>

#include "rackhopf/errors.hpp"

namespace rackhopf {

std::string family_name(Family f) {
  switch (f) {
    case Family::Eminus: return "Eminus";
    case Family::Echi: return "Echi";
    case Family::Etilde: return "Etilde";
    case Family::GenericLambda: return "GenericLambda";
  }
  return "";
}

Family parse_family(const std::string& s) {
  if (s == "Eminus") return Family::Eminus;
  if (s == "Echi") return Family::Echi;
  if (s == "Etilde") return Family::Etilde;
  if (s == "GenericLambda") return Family::GenericLambda;
  throw InvalidInput("unknown family '" + s + "' (expected Eminus, Echi, Etilde or GenericLambda)");
}

const char* sample_kind_name(SampleKind k) {
  switch (k) {
    case SampleKind::Generic: return "generic";
    case SampleKind::Pointed: return "pointed";
    case SampleKind::Copointed: return "copointed";
    case SampleKind::Pinned: return "pinned";
  }
  return "";
}

namespace {

std::vector<std::string> generator_names(const Rack& r) {
  std::vector<std::string> out;
  for (const auto& l : r.labels()) out.push_back("x" + l);
  return out;
}

// Index of the transposition (i j), 1-based points.
struct TranspIndex {
  Rack rack;
  std::vector<Perm> perms;
  int n;
  explicit TranspIndex(int n) : n(n) { rack = transposition_rack(n, &perms); }
  int operator()(int i, int j) const {
    Perm t = transposition(n, i - 1, j - 1);
    return static_cast<int>(std::find(perms.begin(), perms.end(), t) - perms.begin());
  }
};

class RelationSet {
 public:
  explicit RelationSet(int alphabet) : alphabet_(alphabet) {}
  void add(std::vector<Term> terms, const Rational& constant) {
    terms.push_back({Word{}, -constant});
    FreePoly p(alphabet_, std::move(terms));
    if (p.is_zero()) return;
    if (std::find(polys_.begin(), polys_.end(), p) == polys_.end()) polys_.push_back(std::move(p));
  }
  std::vector<FreePoly> take() { return std::move(polys_); }

 private:
  int alphabet_;
  std::vector<FreePoly> polys_;
};

void check_size(const DeformParams& p, std::size_t expected, const char* what) {
  if (p.scalars.size() != expected)
    throw IndexMismatch(std::string("expected ") + std::to_string(expected) + " " + what + ", got " +
                        std::to_string(p.scalars.size()));
}

bool disjoint(const Perm& a, const Perm& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i) && b[i] != static_cast<int>(i)) return false;
  return true;
}

DeformedIdeal transposition_family(const DeformParams& p) {
  if (p.n < 3) throw InvalidInput("transposition families need n >= 3");
  TranspIndex T(p.n);
  const int m = T.rack.size();
  check_size(p, static_cast<std::size_t>(m), "values of alpha");
  RelationSet rels(m);
  auto w = [](int a, int b) { return make_word({a, b}); };
  for (int t = 0; t < m; ++t) rels.add({{w(t, t), 1}}, p.scalars[t]);
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t) {
      if (!disjoint(T.perms[s], T.perms[t])) continue;
      if (p.family == Family::Eminus)
        rels.add({{w(s, t), 1}, {w(t, s), 1}}, p.mu1);
      else
        rels.add({{w(s, t), 1}, {w(t, s), -1}}, 0);
    }
  if (p.family == Family::Eminus) {
    for (int i = 1; i <= p.n; ++i)
      for (int j = 1; j <= p.n; ++j)
        for (int k = 1; k <= p.n; ++k) {
          if (i == j || j == k || i == k) continue;
          const int ij = T(std::min(i, j), std::max(i, j)), ik = T(std::min(i, k), std::max(i, k)),
                    jk = T(std::min(j, k), std::max(j, k));
          rels.add({{w(ij, ik), 1}, {w(ik, jk), 1}, {w(jk, ij), 1}}, p.mu2);
        }
  } else {
    const int mid = p.chi_signs == ChiSigns::Corrected ? 1 : -1;
    for (int i = 1; i <= p.n; ++i)
      for (int j = i + 1; j <= p.n; ++j)
        for (int k = j + 1; k <= p.n; ++k) {
          const int ij = T(i, j), ik = T(i, k), jk = T(j, k);
          rels.add({{w(ij, ik), 1}, {w(ik, jk), mid}, {w(jk, ij), -1}}, p.mu1);
          rels.add({{w(ik, ij), 1}, {w(jk, ik), mid}, {w(ij, jk), -1}}, p.mu1);
        }
  }
  return {T.rack, generator_names(T.rack), rels.take()};
}

DeformedIdeal four_cycle_family(const DeformParams& p) {
  std::vector<Perm> perms;
  Rack r = four_cycle_rack(&perms);
  const int m = r.size();
  check_size(p, static_cast<std::size_t>(m), "values of beta");
  RelationSet rels(m);
  auto w = [](int a, int b) { return make_word({a, b}); };
  auto inv = [&](int s) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), inverse(perms[s])) - perms.begin());
  };
  for (int s = 0; s < m; ++s) rels.add({{w(s, s), 1}}, p.mu1);
  for (int s = 0; s < m; ++s) rels.add({{w(s, inv(s)), 1}, {w(inv(s), s), 1}}, p.scalars[s]);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      if (t == s || t == inv(s)) continue;
      const int nu = r.op(s, t);
      rels.add({{w(s, t), 1}, {w(nu, s), 1}, {w(t, nu), 1}}, p.mu2);
    }
  return {r, generator_names(r), rels.take()};
}

DeformedIdeal generic_family(const DeformParams& p) {
  if (!p.cocycle) throw InvalidInput("GenericLambda needs a cocycle");
  const Cocycle2& q = *p.cocycle;
  auto rp = select_Rprime(enumerate_classes(q.rack()), q);
  check_size(p, rp.size(), "values of lambda (one per R' class)");
  std::vector<FreePoly> gens;
  for (std::size_t c = 0; c < rp.size(); ++c)
    gens.push_back(relation_poly(rp[c], p.flavor, q.size()) - FreePoly::constant(q.size(), p.scalars[c]));
  return {q.rack(), generator_names(q.rack()), std::move(gens)};
}

}  // namespace

DeformedIdeal build_deformed_ideal(const DeformParams& p) {
  switch (p.family) {
    case Family::Eminus:
    case Family::Echi: return transposition_family(p);
    case Family::Etilde: return four_cycle_family(p);
    case Family::GenericLambda: return generic_family(p);
  }
  throw InvalidInput("unknown family");
}

DeformParams zero_params(Family family, int n, const std::optional<Cocycle2>& cocycle) {
  DeformParams p;
  p.family = family;
  p.n = n;
  std::size_t size = 0;
  switch (family) {
    case Family::Eminus:
    case Family::Echi: size = static_cast<std::size_t>(n) * (n - 1) / 2; break;
    case Family::Etilde: size = 6; break;
    case Family::GenericLambda:
      if (!cocycle) throw InvalidInput("GenericLambda needs a cocycle");
      p.cocycle = cocycle;
      size = select_Rprime(enumerate_classes(cocycle->rack()), *cocycle).size();
      break;
  }
  p.scalars.assign(size, 0);
  return p;
}

std::string describe_params(const DeformParams& p) {
  std::string s;
  switch (p.family) {
    case Family::Eminus:
    case Family::Echi: s = "alpha=["; break;
    case Family::Etilde: s = "beta=["; break;
    case Family::GenericLambda: s = "lambda=["; break;
  }
  for (std::size_t i = 0; i < p.scalars.size(); ++i) s += (i ? "," : "") + to_string(p.scalars[i]);
  s += "]";
  if (p.family == Family::Echi)
    s += " mu=" + to_string(p.mu1);
  else if (p.family != Family::GenericLambda)
    s += " mu1=" + to_string(p.mu1) + " mu2=" + to_string(p.mu2);
  else
    s += std::string(" flavor=") + flavor_name(p.flavor);
  return s;
}

DeformedIdeal nichols_presentation(Family family, int n, ChiSigns signs) {
  if (family == Family::GenericLambda) throw InvalidInput("no fixed presentation for GenericLambda");
  DeformParams p = zero_params(family, n);
  p.chi_signs = signs;
  return build_deformed_ideal(p);
}

namespace {

// Raw engine output reduced modulo the range, so draws do not depend on library distributions.
Rational draw(std::mt19937_64& e) {
  const long num = static_cast<long>(e() % 19) - 9;
  const unsigned long den = static_cast<unsigned long>(e() % 4) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> draws(std::mt19937_64& e, std::size_t k) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(draw(e));
  return v;
}

}  // namespace

DeformParams sample_params(Family family, int n, SampleKind kind, std::uint64_t seed, std::uint64_t index,
                           const std::optional<Cocycle2>& cocycle) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(family)};
  std::mt19937_64 e(seq);
  DeformParams p = zero_params(family, n, cocycle);
  const std::size_t k = p.scalars.size();
  if (family == Family::GenericLambda) {
    if (kind == SampleKind::Generic || kind == SampleKind::Pinned)
      throw InvalidInput("GenericLambda samples must be pointed or copointed admissible");
    p.flavor = kind == SampleKind::Pointed ? Flavor::V : Flavor::W;
    ParamSpace space = kind == SampleKind::Pointed ? pointed_lambda_space(*cocycle) : copointed_lambda_space(*cocycle);
    p.scalars = space.expand(draws(e, static_cast<std::size_t>(space.free_dim())));
    return p;
  }
  const Rational c = draw(e);
  switch (kind) {
    case SampleKind::Generic:
    case SampleKind::Pinned:
      p.scalars = draws(e, k);
      p.mu1 = draw(e);
      p.mu2 = family == Family::Echi ? Rational(0) : draw(e);
      break;
    case SampleKind::Pointed:
      p.scalars.assign(k, c);
      p.mu1 = draw(e);
      p.mu2 = family == Family::Echi ? Rational(0) : draw(e);
      break;
    case SampleKind::Copointed:
      p.scalars = draws(e, k);
      break;
  }
  if (family == Family::Etilde && kind != SampleKind::Pointed) {
    // β_σ = β_{σ^{-1}}; otherwise the two anticommutator relations force 1 into the ideal.
    std::vector<Perm> perms;
    four_cycle_rack(&perms);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      auto t = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), inverse(perms[s])) - perms.begin());
      if (t < s) p.scalars[s] = p.scalars[t];
    }
  }
  return p;
}

namespace {

SampleResult run_sample(const DeformParams& p, std::size_t index, SampleKind kind, const GroebnerOptions& opts,
                        std::optional<std::uint64_t> expected) {
  auto t0 = std::chrono::steady_clock::now();
  SampleResult r;
  r.index = index;
  r.kind = kind;
  r.params = describe_params(p);
  DeformedIdeal ideal = build_deformed_ideal(p);
  GroebnerBasis gb = groebner(ideal.generators, ideal.rack.size(), opts);
  TrivialityReport t = is_trivial_quotient(gb);
  r.trivial = t.trivial;
  r.conclusive = t.conclusive;
  r.dim = quotient_dim(gb);
  r.basis_size = gb.elements().size();
  r.expected = expected;
  if (expected) r.flat = r.dim.kind == QuotientDim::Kind::Finite && r.dim.value == *expected;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

VerifyReport verify_nonzero(Family family, int n, const VerifyOptions& o) {
  if (o.samples == 0 && o.pinned.empty()) throw InvalidInput("at least one sample is required");
  VerifyReport rep;
  rep.family = family;
  rep.n = n;
  rep.seed = o.seed;

  auto zero_dim_for = [&](Flavor flavor) {
    DeformParams z = zero_params(family, n, o.cocycle);
    z.chi_signs = o.chi_signs;
    z.flavor = flavor;
    DeformedIdeal ideal = build_deformed_ideal(z);
    return quotient_dim(groebner(ideal.generators, ideal.rack.size(), o.groebner));
  };
  rep.zero_dim = zero_dim_for(Flavor::V);
  std::optional<QuotientDim> zero_w;
  if (family == Family::GenericLambda) zero_w = zero_dim_for(Flavor::W);

  struct Job {
    DeformParams params;
    SampleKind kind;
    std::optional<std::uint64_t> expected;
  };
  std::vector<Job> jobs;
  auto expected_for = [&](SampleKind kind, Flavor flavor) -> std::optional<std::uint64_t> {
    if (kind != SampleKind::Pointed && kind != SampleKind::Copointed) return std::nullopt;
    const QuotientDim& z = flavor == Flavor::W && zero_w ? *zero_w : rep.zero_dim;
    if (z.kind != QuotientDim::Kind::Finite) return std::nullopt;
    return z.value;
  };
  for (std::size_t i = 0; i < o.samples; ++i) {
    SampleKind kind;
    if (family == Family::GenericLambda)
      kind = i % 2 == 0 ? SampleKind::Pointed : SampleKind::Copointed;
    else
      kind = static_cast<SampleKind>(i % 3);
    DeformParams p = sample_params(family, n, kind, o.seed, i, o.cocycle);
    p.chi_signs = o.chi_signs;
    jobs.push_back({p, kind, expected_for(kind, p.flavor)});
  }
  for (const auto& p : o.pinned) {
    if (p.family != family) throw InvalidInput("pinned parameters belong to a different family");
    jobs.push_back({p, SampleKind::Pinned, std::nullopt});
  }

  std::vector<SampleResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const long nj = static_cast<long>(jobs.size());
  auto work = [&](long i) {
    try {
      results[i] = run_sample(jobs[i].params, static_cast<std::size_t>(i), jobs[i].kind, o.groebner, jobs[i].expected);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (o.exec == Exec::Serial) {
    for (long i = 0; i < nj; ++i) work(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nj; ++i) work(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& r : results) {
    if (r.trivial) throw NonzeroCheckFailed(family_name(family) + " " + r.params);
    rep.all_flat = rep.all_flat && r.flat;
  }
  rep.samples = std::move(results);
  return rep;
}

// ---------------------------------------------------------------------------------------------

int ParamPoly::degree() const {
  int d = -1;
  for (const auto& t : terms) d = std::max(d, static_cast<int>(t.word.size()));
  return d;
}

bool ParamPoly::weight_homogeneous() const {
  if (terms.empty()) return true;
  auto weight = [](const ParamTerm& t) { return t.word.size() + 2 * t.params.size(); };
  for (const auto& t : terms)
    if (weight(t) != weight(terms.front())) return false;
  return true;
}

FreePoly ParamPoly::specialize(const std::map<std::string, Rational>& values, int alphabet) const {
  std::vector<Term> out;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    for (const auto& name : t.params) {
      auto it = values.find(name);
      if (it == values.end()) throw InvalidInput("no value for parameter " + name);
      c *= it->second;
    }
    out.push_back({t.word, c});
  }
  return FreePoly(alphabet, std::move(out));
}

namespace {

ParamPoly normalize(std::vector<ParamTerm> terms) {
  std::map<std::pair<std::vector<std::string>, Word>, Rational> acc;
  for (auto& t : terms) {
    std::sort(t.params.begin(), t.params.end());
    acc[{t.params, t.word}] += t.coeff;
  }
  ParamPoly p;
  for (auto& [key, c] : acc)
    if (!is_zero(c)) p.terms.push_back({c, key.first, key.second});
  return p;
}

ParamPoly multiply(const ParamPoly& a, const ParamPoly& b) {
  std::vector<ParamTerm> out;
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) {
      ParamTerm u{s.coeff * t.coeff, s.params, s.word + t.word};
      u.params.insert(u.params.end(), t.params.begin(), t.params.end());
      out.push_back(std::move(u));
    }
  return normalize(std::move(out));
}

class Parser {
 public:
  Parser(const std::string& text, const Rack& rack) : s_(text), rack_(rack) {}

  ParamPoly parse() {
    ParamPoly p = sum();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("parse error at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  ParamPoly sum() {
    std::vector<ParamTerm> terms;
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else if (!eat('+') && !first)
        break;
      first = false;
      for (auto t : product().terms) {
        t.coeff *= sign;
        terms.push_back(std::move(t));
      }
    }
    return normalize(std::move(terms));
  }

  ParamPoly product() {
    ParamPoly p = power();
    while (eat('*')) p = multiply(p, power());
    return p;
  }

  ParamPoly power() {
    ParamPoly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an exponent");
    int k = std::stoi(s_.substr(start, i_ - start));
    ParamPoly out = normalize({{1, {}, Word{}}});
    for (int j = 0; j < k; ++j) out = multiply(out, base);
    return out;
  }

  ParamPoly atom() {
    skip();
    if (eat('(')) {
      ParamPoly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
      return normalize({{parse_rational(s_.substr(start, i_ - start)), {}, Word{}}});
    }
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::string name = s_.substr(start, i_ - start);
    if (name.empty()) fail("expected a factor");
    if (name.size() == 3 && name[0] == 'x') {
      int g = rack_.find("(" + name.substr(1) + ")");
      if (g < 0) fail("unknown generator " + name);
      return normalize({{1, {}, make_word({g})}});
    }
    if ((name.size() == 3 && name[0] == 'a' && rack_.find("(" + name.substr(1) + ")") >= 0) || name == "m1" ||
        name == "m2")
      return normalize({{1, {name}, Word{}}});
    fail("unknown symbol " + name);
  }

  const std::string& s_;
  const Rack& rack_;
  std::size_t i_ = 0;
};

}  // namespace

ParamPoly parse_param_poly(const std::string& text, const Rack& transpositions) {
  return Parser(text, transpositions).parse();
}

std::vector<std::string> reference_basis(BasisVariant variant) {
  std::vector<std::string> out = reference_basis_text();
  if (variant == BasisVariant::Corrected) {
    auto swap_in = [](std::string& s, const std::string& from, const std::string& to) {
      auto at = s.find(from);
      if (at == std::string::npos) throw AssertionFailure("reference element 12 changed shape");
      s.replace(at, from.size(), to);
    };
    swap_in(out[11], "(-a13*m1-m1*m1+a14*m1)*x14*x34", "(-a13*m1+a14*m1)*x14*x34");
    swap_in(out[11], "(a12*m1+m2*m2)*x14*x12", "(a12*m1-m1*m1+m2*m2)*x14*x12");
  }
  return out;
}

AppendixReport appendix_membership_audit(const DeformParams& params, bool perturb_control, BasisVariant variant,
                                         GroebnerOptions options) {
  if (params.family != Family::Eminus || params.n != 4)
    throw InvalidInput("the reference basis audit applies to Eminus with n = 4");
  DeformedIdeal ideal = build_deformed_ideal(params);
  GroebnerBasis gb = groebner(ideal.generators, ideal.rack.size(), options);
  std::map<std::string, Rational> values{{"m1", params.mu1}, {"m2", params.mu2}};
  for (int t = 0; t < ideal.rack.size(); ++t) {
    const std::string& l = ideal.rack.label(t);  // "(ij)"
    values["a" + l.substr(1, 2)] = params.scalars[t];
  }
  AppendixReport rep;
  rep.params = describe_params(params);
  rep.variant = variant;
  const auto texts = reference_basis(variant);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    ParamPoly pp = parse_param_poly(texts[i], ideal.rack);
    if (perturb_control && i == 0) {
      const Word target = make_word({ideal.rack.find("(12)"), ideal.rack.find("(13)"), ideal.rack.find("(12)")});
      for (auto& t : pp.terms)
        if (t.word == target && t.params.empty()) t.coeff = -t.coeff;
    }
    AppendixEntry e;
    e.index = i;
    e.weight_consistent = pp.weight_homogeneous();
    FreePoly nf = gb.normal_form(pp.specialize(values, ideal.rack.size()));
    e.reduces_to_zero = nf.is_zero();
    if (!e.reduces_to_zero) e.residue = nf.to_string(ideal.names);
    rep.all_pass = rep.all_pass && e.reduces_to_zero && e.weight_consistent;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// ---------------------------------------------------------------------------------------------

IsoWitness iso_class_equal_pointed(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw IndexMismatch("parameter vectors differ in length");
  auto nz = [](const std::vector<Rational>& v) {
    return std::find_if(v.begin(), v.end(), [](const Rational& r) { return !is_zero(r); }) - v.begin();
  };
  const auto ka = nz(a), kb = nz(b);
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  if (ka == n || kb == n) return {ka == n && kb == n, 1, -1};
  if (ka != kb) return {};
  Rational mu = b[kb] / a[ka];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != mu * a[i]) return {};
  return {true, mu, -1};
}

IsoWitness iso_class_equal_copointed(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     const Rack& rack, const std::vector<Perm>& perms) {
  const std::size_t n = static_cast<std::size_t>(rack.size());
  if (a.size() != n || b.size() != n || perms.size() != n) throw IndexMismatch("parameter vectors must match the rack");
  const int degree = static_cast<int>(perms.front().size());
  PermGroup g = PermGroup::symmetric(degree);
  for (std::size_t h = 0; h < g.order(); ++h) {
    std::vector<Rational> moved(n);
    for (std::size_t x = 0; x < n; ++x) {
      Perm image = conjugate(g.elements()[h], perms[x]);
      auto it = std::find(perms.begin(), perms.end(), image);
      if (it == perms.end()) throw InvalidInput("rack is not closed under conjugation");
      moved[x] = a[it - perms.begin()];
    }
    IsoWitness w = iso_class_equal_pointed(moved, b);
    if (w.equal && !is_zero(w.mu)) {
      w.theta = static_cast<int>(h);
      return w;
    }
  }
  return {};
}

}  // namespace rackhopf

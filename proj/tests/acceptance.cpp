// Acceptance suite: one PASS/FAIL line per criterion.
//
// Default exit status is nonzero only for an unexpected outcome. Criterion 5 is expected to FAIL
// with one exact signature (see README, "Reference basis audit"); any other outcome for it is
// unexpected. --strict makes every FAIL fatal.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "rackhopf/cli.hpp"
#include "rackhopf/deform.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/lifting.hpp"
#include "rackhopf/smash.hpp"

using namespace rackhopf;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string summary;
  // Set when a FAIL is the documented expected result.
  bool expected_failure = false;
};

// Completed bases collected along the way for the engine-property criterion.
std::vector<GroebnerBasis> g_bases;

Outcome quadratic_kernels() {
  Rack r4 = transposition_rack(4), r44 = four_cycle_rack();
  const std::pair<const char*, Cocycle2> families[] = {
      {"(O24,-1)", constant_cocycle(r4, -1)}, {"(O24,chi)", chi_cocycle(r4, 4)}, {"(O44,-1)", constant_cocycle(r44, -1)}};
  bool ok = true;
  double worst = 0;
  std::ostringstream s;
  for (const auto& [name, q] : families)
    for (Flavor f : {Flavor::V, Flavor::W}) {
      const auto t0 = Clock::now();
      J2Report j = verify_J2_report(q, f);
      const std::size_t rprime = select_Rprime(enumerate_classes(q.rack()), q).size();
      const double dt = since(t0);
      worst = std::max(worst, dt);
      const bool good = j.equal && j.kernel_dim == 17 && rprime == 17 && dt < 1.0;
      ok = ok && good;
      if (!good) s << name << "/" << flavor_name(f) << " kernel=" << j.kernel_dim << " |R'|=" << rprime << "; ";
    }
  s << "6 cases, kernel dim 17 = |R'|, span equal; slowest " << std::fixed << std::setprecision(3) << worst << " s";
  return {ok, s.str()};
}

Outcome fk3_cross_check() {
  const auto t0 = Clock::now();
  GroebnerBasis g = groebner(nichols_presentation(Family::Eminus, 3).generators, 3);
  const QuotientDim d = quotient_dim(g);
  const auto h = hilbert_series(g, 4);
  NicholsDims oracle = nichols_dim_oracle(make_braiding(constant_cocycle(transposition_rack(3), -1), Flavor::V), 5);
  const double dt = since(t0);
  g_bases.push_back(g);
  std::ostringstream s;
  s << "groebner dim " << d.to_string() << ", hilbert";
  for (auto x : h) s << " " << x;
  s << "; symmetrizer total " << oracle.total << (oracle.truncated ? " (truncated)" : "") << "; " << std::fixed
    << std::setprecision(3) << dt << " s";
  const bool ok = d.kind == QuotientDim::Kind::Finite && d.value == 12 &&
                  h == std::vector<std::uint64_t>{1, 3, 4, 3, 1} && oracle.total == 12 && !oracle.truncated &&
                  dt < 10.0;
  return {ok, s.str()};
}

Outcome s4_dimensions() {
  bool ok = true;
  std::ostringstream s;
  for (Family f : {Family::Eminus, Family::Echi, Family::Etilde}) {
    const auto t0 = Clock::now();
    DeformedIdeal ideal = nichols_presentation(f, 4);
    GroebnerBasis g = groebner(ideal.generators, ideal.rack.size());
    const QuotientDim d = quotient_dim(g);
    const double dt = since(t0);
    g_bases.push_back(g);
    ok = ok && d.kind == QuotientDim::Kind::Finite && d.value == 576 && dt < 600.0;
    s << family_name(f) << "=" << d.to_string() << " (" << std::fixed << std::setprecision(2) << dt << " s) ";
  }
  return {ok, s.str()};
}

Outcome nonzero_sampling() {
  bool ok = true;
  std::ostringstream s;
  std::size_t total = 0;
  const std::pair<Family, int> runs[] = {
      {Family::Eminus, 3}, {Family::Eminus, 4}, {Family::Echi, 3}, {Family::Echi, 4}, {Family::Etilde, 4}};
  for (const auto& [f, n] : runs) {
    VerifyOptions o;
    o.samples = 20;
    o.seed = 20240601;
    try {
      VerifyReport r = verify_nonzero(f, n, o);
      std::size_t admissible = 0;
      for (const auto& x : r.samples) admissible += x.expected.has_value();
      total += r.samples.size();
      const bool good = r.all_nonzero && r.all_flat && r.samples.size() >= 20 &&
                        r.zero_dim.value == (n == 3 ? 12u : 576u);
      ok = ok && good;
      s << family_name(f) << "/n=" << n << " zero=" << r.zero_dim.to_string() << " admissible=" << admissible
        << (good ? "" : " FAILED") << "; ";
    } catch (const NonzeroCheckFailed& e) {
      ok = false;
      s << family_name(f) << "/n=" << n << " trivial quotient: " << e.what() << "; ";
    }
  }
  s << total << " samples";
  return {ok, s.str()};
}

Outcome reference_basis_audit() {
  constexpr std::size_t kSpecializations = 6;
  bool all_members = true, controls = true, corrected_ok = true, signature = true;
  std::size_t failing_runs = 0;
  std::vector<DeformParams> specs;
  for (std::size_t i = 0; i < kSpecializations; ++i)
    specs.push_back(sample_params(Family::Eminus, 4, SampleKind::Generic, 20240602, i));
  // one specialization with mu1 = 0, where the printed element 12 is expected to reduce
  specs.push_back(specs.front());
  specs.back().mu1 = 0;
  for (const auto& p : specs) {
    AppendixReport printed = appendix_membership_audit(p);
    AppendixReport corrected = appendix_membership_audit(p, false, BasisVariant::Corrected);
    controls = controls && !appendix_membership_audit(p, true).entries.front().reduces_to_zero &&
               !appendix_membership_audit(p, true, BasisVariant::Corrected).entries.front().reduces_to_zero;
    corrected_ok = corrected_ok && corrected.all_pass;
    all_members = all_members && printed.all_pass;
    failing_runs += !printed.all_pass;
    for (const auto& e : printed.entries) {
      const bool expect_member = e.index != 11 || is_zero(p.mu1);
      signature = signature && e.weight_consistent && e.reduces_to_zero == expect_member;
    }
  }
  std::ostringstream s;
  s << specs.size() << " specializations; printed basis: " << (all_members ? "all members" : "element 12 not in the ideal")
    << " in " << failing_runs << " (exactly those with mu1 != 0)" << (signature ? "" : " [signature changed]")
    << "; corrected element 12: " << (corrected_ok ? "all members" : "FAILS")
    << "; perturbed control flagged: " << (controls ? "yes" : "NO");
  Outcome o{all_members && controls, s.str()};
  o.expected_failure = !all_members && signature && corrected_ok && controls;
  return o;
}

Outcome parameter_spaces() {
  const auto t0 = Clock::now();
  Rack r4 = transposition_rack(4), r44 = four_cycle_rack();
  Cocycle2 minus = constant_cocycle(r4, -1), chi = chi_cocycle(r4, 4), cycles = constant_cocycle(r44, -1);
  bool ok = true;
  auto by_size = [](const ParamSpace& s, auto&& pred) {
    for (std::size_t c = 0; c < s.size(); ++c)
      if (!pred(s.classes()[c].size(), s.is_zero(static_cast<int>(c)), s.resolve(static_cast<int>(c)))) return false;
    return true;
  };
  // pointed (O24,-1): one free parameter per class size, nothing forced to zero
  ParamSpace pm = pointed_lambda_space(minus);
  ok = ok && pm.free_dim() == 3 && by_size(pm, [&](int, bool zero, auto) { return !zero; });
  for (std::size_t a = 0; a < pm.size(); ++a)
    for (std::size_t b = 0; b < pm.size(); ++b)
      ok = ok && ((pm.resolve(static_cast<int>(a)) == pm.resolve(static_cast<int>(b))) ==
                  (pm.classes()[a].size() == pm.classes()[b].size()));
  ParamSpace pc = pointed_lambda_space(chi);
  ok = ok && pc.free_dim() == 2 && by_size(pc, [](int size, bool zero, auto) { return zero == (size == 2); });
  ParamSpace p44 = pointed_lambda_space(cycles);
  ok = ok && p44.free_dim() == 3;
  // copointed: only singletons survive for transpositions, only pairs for four-cycles
  for (const Cocycle2* q : {&minus, &chi}) {
    ParamSpace s = copointed_lambda_space(*q);
    ok = ok && s.free_dim() == 6 && by_size(s, [](int size, bool zero, auto) { return zero == (size != 1); });
  }
  ParamSpace c44 = copointed_lambda_space(cycles);
  ok = ok && c44.free_dim() == 3 && by_size(c44, [](int size, bool zero, auto) { return zero == (size != 2); });
  const bool hom = hom_vanishing_check(minus).all && hom_vanishing_check(chi).all && hom_vanishing_check(cycles).all;
  const double dt = since(t0);
  ok = ok && hom && dt < 1.0;
  std::ostringstream s;
  s << "pointed free dims " << pm.free_dim() << "/" << pc.free_dim() << "/" << p44.free_dim() << ", copointed "
    << copointed_lambda_space(minus).free_dim() << "/" << copointed_lambda_space(chi).free_dim() << "/"
    << c44.free_dim() << ", Hom vanishing " << (hom ? "all" : "NOT all") << "; " << std::fixed << std::setprecision(3)
    << dt << " s";
  return {ok, s.str()};
}

Outcome realization_audits() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t checks = 0;
  std::ostringstream s;
  for (const char* name : {"o24-sgn", "o24-chi", "o44-sgn"}) {
    PrincipalRealization r = named_realization(name);
    Cocycle2 q = realization_cocycle(r);
    std::vector<AuditReport> reports{validate_principal(r, q), comatrix_action_audit(r, Side::Pointed, q),
                                     comatrix_action_audit(r, Side::Copointed, q)};
    for (const auto& a : reports) {
      for (const auto& c : a.checks) checks += c.checked;
      if (!a.all()) {
        ok = false;
        for (const auto& c : a.checks)
          if (!c.ok()) s << name << ":" << c.name << " fails at " << c.witness << "; ";
      }
    }
    const bool dual = dual_braiding_check(r).equal, theta = theta_characters(r).ok(),
               condition = condition_offenders(r, q).empty();
    ok = ok && dual && theta && condition;
    if (!dual || !theta || !condition) s << name << ": dual=" << dual << " theta=" << theta << " condition=" << condition << "; ";
  }
  const double dt = since(t0);
  ok = ok && dt < 30.0;
  s << "3 data, " << checks << " exhaustive checks, dual braiding, theta, g_C != g_x; " << std::fixed
    << std::setprecision(2) << dt << " s";
  return {ok, s.str()};
}

FreePoly relabel(const FreePoly& p, const std::vector<int>& sigma) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Word w = t.word;
    for (auto& ch : w) ch = static_cast<char>(sigma[static_cast<unsigned char>(ch)]);
    terms.push_back({w, t.coeff});
  }
  return FreePoly(p.alphabet(), terms);
}

Rational small_nonzero(std::mt19937_64& e) {
  long num = static_cast<long>(e() % 9) - 4;
  if (num == 0) num = 1;
  Rational r(num, static_cast<long>(e() % 3 + 1));
  r.canonicalize();
  return r;
}

Outcome engine_properties() {
  std::mt19937_64 e(20240603);
  std::ostringstream s;

  // braid equation on 100 random (rack, cocycle) pairs of size <= 6
  std::size_t braid_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rack r = [&] {
      switch (e() % 5) {
        case 0: return transposition_rack(3 + static_cast<int>(e() % 2));
        case 1: return four_cycle_rack();
        case 2: return dihedral_quandle(3 + static_cast<int>(e() % 4));
        case 3: return trivial_rack(1 + static_cast<int>(e() % 6));
        default: {
          Perm p = identity_perm(1 + static_cast<int>(e() % 6));
          std::shuffle(p.begin(), p.end(), e);
          return permutation_rack(p);
        }
      }
    }();
    // ω f(x▷y)/f(y) is a cocycle on every rack
    const Rational omega = small_nonzero(e);
    std::vector<Rational> f(r.size());
    for (auto& v : f) v = small_nonzero(e);
    std::vector<std::vector<Rational>> values(r.size(), std::vector<Rational>(r.size()));
    for (int x = 0; x < r.size(); ++x)
      for (int y = 0; y < r.size(); ++y) values[x][y] = omega * f[r.op(x, y)] / f[y];
    Cocycle2 q = validate_cocycle(r, values);
    braid_ok += check_braid_equation(make_braiding(q, trial % 2 ? Flavor::W : Flavor::V));
  }

  // idempotent normal forms and obstruction audit on every completed basis
  for (std::uint64_t i = 0; i < 3; ++i) {
    DeformedIdeal d = build_deformed_ideal(sample_params(Family::Eminus, 4, SampleKind::Generic, 20240604, i));
    g_bases.push_back(groebner(d.generators, d.rack.size()));
  }
  std::size_t audited = 0, idempotent = 0, nf_trials = 0;
  bool audits_ok = true;
  for (const auto& g : g_bases) {
    if (!g.complete()) continue;
    ++audited;
    audits_ok = audits_ok && audit_obstructions(g).ok();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Term> terms;
      for (int t = 0; t < 4; ++t) {
        Word w;
        const int len = static_cast<int>(e() % 7);
        for (int k = 0; k < len; ++k) w.push_back(static_cast<char>(e() % g.alphabet()));
        terms.push_back({w, Rational(static_cast<long>(e() % 7) - 3)});
      }
      FreePoly once = normal_form(FreePoly(g.alphabet(), terms), g);
      ++nf_trials;
      idempotent += normal_form(once, g) == once;
    }
  }

  // quotient dimension under generator permutations of the FK3 ideal
  DeformedIdeal fk3 = nichols_presentation(Family::Eminus, 3);
  std::size_t invariant = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> sigma{0, 1, 2};
    std::shuffle(sigma.begin(), sigma.end(), e);
    std::vector<FreePoly> gens;
    for (const auto& p : fk3.generators) gens.push_back(relabel(p, sigma));
    std::shuffle(gens.begin(), gens.end(), e);
    invariant += quotient_dim(groebner(gens, 3)).value == 12;
  }

  // exterior algebra on 5 letters with S4 permuting the first four; smash has dimension 32*24
  const int n = 5;
  std::vector<FreePoly> ext;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      ext.push_back(i == j ? FreePoly::monomial(n, make_word({i, i}))
                           : FreePoly::monomial(n, make_word({i, j})) + FreePoly::monomial(n, make_word({j, i})));
  GroebnerBasis eg = groebner(ext, n);
  std::vector<Word> words;
  FiniteAlgebra a = quotient_algebra(eg, {"a", "b", "c", "d", "e"}, &words);
  const FiniteGroup s4 = FiniteGroup::symmetric(4);
  ModuleAlgebraAction act = letter_action_on_quotient(eg, words, s4, [&](int h, int l) {
    return std::pair<int, Rational>{l < 4 ? s4.element(h)[l] : l, 1};
  });
  check_module_algebra(a, act);
  FiniteAlgebra smash = smash_product(a, act);
  AssociativityAudit assoc = associativity_audit(smash);

  const bool ok = braid_ok == 100 && audits_ok && idempotent == nf_trials && invariant == 10 && assoc.ok() &&
                  smash.dim() == 32 * 24 && assoc.triples == 768ull * 768 * 768;
  s << "braid " << braid_ok << "/100; " << audited << " bases audited, nf idempotent " << idempotent << "/" << nf_trials
    << "; FK3 dim invariant " << invariant << "/10; smash dim " << smash.dim() << " associative on " << assoc.triples
    << " triples" << (assoc.ok() ? "" : " FAILED at " + assoc.witness);
  return {ok, s.str()};
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"deform", "verify", "--family", "Eminus", "--n", "4", "--samples", "9", "--seed", "7"},
      {"deform", "verify", "--family", "Etilde", "--samples", "6", "--seed", "11"},
      {"deform", "audit", "--samples", "3", "--seed", "5"},
      {"realize", "check", "--realization", "o24-chi"},
      {"nichols", "hilbert", "--rack", "o23", "--oracle"}};
  std::size_t identical = 0, serial_identical = 0;
  for (const auto& c : commands) {
    const std::string first = cli_output(c);
    identical += first == cli_output(c) && !first.empty();
    auto serial = c;
    serial.push_back("--serial");
    serial_identical += first == cli_output(serial);
  }
  std::ostringstream s;
  s << identical << "/" << commands.size() << " reports byte-identical on rerun, " << serial_identical << "/"
    << commands.size() << " identical to the serial kernels";
  return {identical == commands.size() && serial_identical == commands.size(), s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") {
      strict = true;
    } else {
      std::cerr << "usage: acceptance [--strict]\n";
      return 2;
    }
  }
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"quadratic kernels", quadratic_kernels},   {"FK3 oracle cross-check", fk3_cross_check},
      {"S4 Nichols dimensions", s4_dimensions},   {"nonzero deformations", nonzero_sampling},
      {"reference basis audit", reference_basis_audit}, {"parameter spaces", parameter_spaces},
      {"realization audits", realization_audits}, {"engine properties", engine_properties},
      {"determinism", determinism}};
  int unexpected = 0, failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    const bool bad = !o.pass && (strict || !o.expected_failure);
    unexpected += bad;
    std::cout << "criterion " << index << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.summary
              << (!o.pass && o.expected_failure ? "  [expected]" : "") << std::endl;
  }
  std::cout << (9 - failed) << "/9 criteria pass";
  if (failed && !unexpected) std::cout << "; every FAIL matches its documented signature";
  std::cout << std::endl;
  return unexpected ? 1 : 0;
}

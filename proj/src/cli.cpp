#include "rackhopf/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "rackhopf/errors.hpp"
#include "rackhopf/json_io.hpp"
#include "rackhopf/lifting.hpp"

namespace rackhopf {

namespace {

using io::json;

struct Options {
  std::string rack = "o24";
  std::string cocycle = "const:-1";
  std::string flavor = "V";
  std::string file;
  std::string json_out;
  std::string family = "Eminus";
  std::string realization = "o24-sgn";
  std::string lambda;
  std::string variant = "printed";
  std::string chi_signs = "corrected";
  std::string side = "both";
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  int max_deg = 16;
  std::size_t max_basis = 200'000;
  int n = 4;
  bool timings = false;
  bool oracle = false;
  bool serial = false;
};

class Report {
 public:
  json result = json::object();

  void check(const std::string& name, bool ok, json detail = nullptr) {
    json a = {{"name", name}, {"ok", ok}};
    if (!detail.is_null()) a["detail"] = std::move(detail);
    assertions_.push_back(std::move(a));
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  const json& assertions() const { return assertions_; }

 private:
  json assertions_ = json::array();
  bool failed_ = false;
};

bool is_json_path(const std::string& s) { return s.size() > 5 && s.substr(s.size() - 5) == ".json"; }

Rack load_rack(const Options& o, std::vector<Perm>* perms = nullptr) {
  if (!o.file.empty()) return io::rack_from_json(io::load_json_file(o.file), perms);
  if (is_json_path(o.rack)) return io::rack_from_json(io::load_json_file(o.rack), perms);
  return io::named_rack(o.rack, perms);
}

Cocycle2 load_cocycle(const Rack& r, const Options& o) {
  if (is_json_path(o.cocycle)) return io::cocycle_from_json(r, io::load_json_file(o.cocycle));
  return make_cocycle(r, o.cocycle);
}

PrincipalRealization load_realization(const Options& o) {
  if (!o.file.empty()) return io::realization_from_json(io::load_json_file(o.file));
  if (is_json_path(o.realization)) return io::realization_from_json(io::load_json_file(o.realization));
  return named_realization(o.realization);
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw InvalidInput("empty entry in list '" + s + "'");
    out.push_back(parse_rational(item));
  }
  return out;
}

Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

std::vector<std::string> class_labels(const RelClass& c, const Rack& r) {
  std::vector<std::string> out;
  for (int x : c.seq) out.push_back(r.label(x));
  return out;
}

json audit_json(const AuditReport& a, Report& rep, const std::string& prefix) {
  json out = json::array();
  for (const auto& c : a.checks) {
    json d = {{"checked", c.checked}, {"failures", c.failures}};
    if (!c.witness.empty()) d["witness"] = c.witness;
    rep.check(prefix + c.name, c.ok(), d);
    out.push_back({{"name", c.name}, {"checked", c.checked}, {"failures", c.failures}});
  }
  return out;
}

// ---- command bodies ----

void rack_check(const Options& o, Report& rep, bool props) {
  std::vector<Perm> perms;
  Rack r = load_rack(o, &perms);
  RackProperties p = rack_properties(r);
  rep.result = {{"size", r.size()},
                {"labels", r.labels()},
                {"quandle", p.quandle},
                {"faithful", p.faithful},
                {"indecomposable", p.indecomposable}};
  rep.check("rack-axioms", true);
  if (!props) return;
  InnerGroup inner = inner_group(r);
  rep.result["inner_group_order"] = inner.group.order();
  rep.result["table"] = r.table();
  rep.check("inner-group-relation", !inner.violation.has_value());
  if (!perms.empty()) {
    const int degree = static_cast<int>(perms.front().size());
    rep.check("enveloping-relation", check_enveloping_map(r, PermGroup::symmetric(degree), perms));
  }
}

void cocycle_check(const Options& o, Report& rep) {
  Rack r = load_rack(o);
  Cocycle2 q = load_cocycle(r, o);
  rep.result = io::cocycle_to_json(q);
  rep.result["rack_size"] = r.size();
  rep.check("cocycle-law", true);
}

void braid_check(const Options& o, Report& rep) {
  Rack r = load_rack(o);
  Cocycle2 q = load_cocycle(r, o);
  const Flavor f = parse_flavor(o.flavor);
  rep.result = {{"flavor", flavor_name(f)}, {"dim", r.size()}};
  rep.check("braid-equation", check_braid_equation(make_braiding(q, f), exec_of(o)));
}

std::vector<FreePoly> quadratic_relations(const Cocycle2& q, Flavor f) {
  std::vector<FreePoly> gens;
  for (const auto& c : select_Rprime(enumerate_classes(q.rack()), q)) gens.push_back(relation_poly(c, f, q.size()));
  return gens;
}

void nichols_dim(const Options& o, Report& rep, bool hilbert) {
  Rack r = load_rack(o);
  Cocycle2 q = load_cocycle(r, o);
  const Flavor f = parse_flavor(o.flavor);
  auto gens = quadratic_relations(q, f);
  GroebnerBasis gb = groebner(gens, r.size(), {o.max_deg, o.max_basis});
  const QuotientDim d = quotient_dim(gb);
  rep.result = {{"flavor", flavor_name(f)},
                {"relations", gens.size()},
                {"basis_size", gb.elements().size()},
                {"complete", gb.complete()},
                {"dim", io::quotient_dim_to_json(d)}};
  rep.check("groebner-complete", gb.complete());
  if (!hilbert) return;
  int top = o.max_deg;
  if (d.kind == QuotientDim::Kind::Finite) {
    top = 0;
    for (const auto& w : normal_words(gb)) top = std::max(top, static_cast<int>(w.size()));
  }
  auto h = hilbert_series(gb, top);
  rep.result["hilbert"] = h;
  if (o.oracle) {
    NicholsDims nd = nichols_dim_oracle(make_braiding(q, f), std::min(top, 4), exec_of(o));
    rep.result["symmetrizer_ranks"] = nd.dims;
    bool agree = true;
    for (std::size_t m = 0; m < nd.dims.size() && m < h.size(); ++m) agree = agree && nd.dims[m] == h[m];
    rep.check("quadratic-matches-symmetrizer", agree);
  }
}

void nichols_j2(const Options& o, Report& rep) {
  Rack r = load_rack(o);
  Cocycle2 q = load_cocycle(r, o);
  const Flavor f = parse_flavor(o.flavor);
  J2Report j = verify_J2_report(q, f);
  rep.result = {{"flavor", flavor_name(f)},
                {"kernel_dim", j.kernel_dim},
                {"relation_count", j.relation_count},
                {"relation_rank", j.relation_rank}};
  rep.check("span-equals-kernel", j.equal);
}

void gb_run(const Options& o, Report& rep) {
  if (o.file.empty()) throw InvalidInput("gb run needs --file with {\"names\": [..], \"generators\": [..]}");
  io::IdealSpec spec = io::ideal_from_json(io::load_json_file(o.file));
  const int alphabet = static_cast<int>(spec.names.size());
  GroebnerBasis gb = groebner(spec.generators, alphabet, {o.max_deg, o.max_basis});
  json basis = json::array();
  for (const auto& g : gb.elements()) basis.push_back(g.to_string(spec.names));
  const QuotientDim d = quotient_dim(gb);
  rep.result = {{"basis", basis}, {"complete", gb.complete()}, {"dim", io::quotient_dim_to_json(d)}};
  if (gb.truncated_at()) rep.result["truncated_at"] = *gb.truncated_at();
  if (d.kind == QuotientDim::Kind::Finite) {
    int top = 0;
    for (const auto& w : normal_words(gb)) top = std::max(top, static_cast<int>(w.size()));
    rep.result["hilbert"] = hilbert_series(gb, top);
  }
  ObstructionAudit a = audit_obstructions(gb, exec_of(o));
  rep.check("obstruction-audit", a.ok(), {{"checked", a.checked}, {"failures", a.failures}});
}

void deform_verify(const Options& o, Report& rep) {
  const Family family = parse_family(o.family);
  VerifyOptions v;
  v.samples = o.samples;
  v.seed = o.seed;
  v.exec = exec_of(o);
  v.groebner.max_degree = o.max_deg;
  if (o.chi_signs != "corrected" && o.chi_signs != "printed") throw InvalidInput("--chi-signs is corrected or printed");
  v.chi_signs = o.chi_signs == "printed" ? ChiSigns::AsPrinted : ChiSigns::Corrected;
  if (family == Family::GenericLambda) {
    Rack r = load_rack(o);
    v.cocycle = load_cocycle(r, o);
  }
  if (!o.file.empty()) {
    json j = io::load_json_file(o.file);
    if (j.is_array())
      for (const auto& p : j) v.pinned.push_back(io::params_from_json(p));
    else
      v.pinned.push_back(io::params_from_json(j));
  }
  VerifyReport r = verify_nonzero(family, family == Family::Etilde ? 4 : o.n, v);
  json samples = json::array();
  for (const auto& s : r.samples) {
    json e = {{"index", s.index},
              {"kind", sample_kind_name(s.kind)},
              {"params", s.params},
              {"trivial", s.trivial},
              {"conclusive", s.conclusive},
              {"dim", io::quotient_dim_to_json(s.dim)},
              {"basis_size", s.basis_size}};
    if (s.expected) {
      e["expected"] = *s.expected;
      e["flat"] = s.flat;
    }
    if (o.timings) e["seconds"] = s.seconds;
    samples.push_back(std::move(e));
  }
  rep.result = {{"family", family_name(family)},
                {"n", r.n},
                {"zero_dim", io::quotient_dim_to_json(r.zero_dim)},
                {"samples", samples}};
  rep.check("nonzero", r.all_nonzero);
  rep.check("flat-at-admissible", r.all_flat);
}

void deform_audit(const Options& o, Report& rep) {
  if (o.variant != "printed" && o.variant != "corrected") throw InvalidInput("--variant is printed or corrected");
  const BasisVariant variant = o.variant == "printed" ? BasisVariant::Printed : BasisVariant::Corrected;
  std::vector<DeformParams> specs;
  if (!o.file.empty()) {
    json j = io::load_json_file(o.file);
    if (j.is_array())
      for (const auto& p : j) specs.push_back(io::params_from_json(p));
    else
      specs.push_back(io::params_from_json(j));
  } else {
    for (std::size_t k = 0; k < o.samples; ++k) specs.push_back(sample_params(Family::Eminus, 4, SampleKind::Generic, o.seed, k));
  }
  json runs = json::array();
  bool members = true, control = true;
  for (const auto& p : specs) {
    AppendixReport a = appendix_membership_audit(p, false, variant);
    AppendixReport c = appendix_membership_audit(p, true, variant);
    json failing = json::array();
    for (const auto& e : a.entries)
      if (!e.reduces_to_zero || !e.weight_consistent)
        failing.push_back({{"element", e.index + 1}, {"weight_consistent", e.weight_consistent}, {"residue", e.residue}});
    runs.push_back({{"params", a.params}, {"elements", a.entries.size()}, {"failing", failing},
                    {"control_flagged", !c.entries.front().reduces_to_zero}});
    members = members && a.all_pass;
    control = control && !c.entries.front().reduces_to_zero;
  }
  rep.result = {{"variant", o.variant}, {"specializations", runs}};
  rep.check("membership", members);
  rep.check("perturbed-control-flagged", control);
}

json space_json(const ParamSpace& s, const Rack& r) {
  json classes = json::array();
  for (std::size_t c = 0; c < s.size(); ++c) {
    auto [root, ratio] = s.resolve(static_cast<int>(c));
    json e = {{"class", class_labels(s.classes()[c], r)}, {"size", s.classes()[c].size()}};
    if (s.is_zero(static_cast<int>(c)))
      e["lambda"] = "0";
    else
      e["lambda"] = to_string(ratio) + "*lambda[" + std::to_string(root) + "]";
    classes.push_back(std::move(e));
  }
  return {{"free_dim", s.free_dim()}, {"free_generators", s.free_generators()}, {"classes", classes}};
}

void deform_params(const Options& o, Report& rep) {
  Rack r = load_rack(o);
  Cocycle2 q = load_cocycle(r, o);
  HomVanishing h = hom_vanishing_check(q);
  rep.result = {{"rprime", select_Rprime(enumerate_classes(r), q).size()},
                {"pointed", space_json(pointed_lambda_space(q), r)},
                {"copointed", space_json(copointed_lambda_space(q), r)},
                {"hom_vanishing", h.all}};
}

void lift_pointed(const Options& o, Report& rep) {
  PrincipalRealization real = load_realization(o);
  Cocycle2 q = realization_cocycle(real);
  ParamSpace space = pointed_lambda_space(q);
  std::vector<Rational> free;
  if (!o.lambda.empty()) {
    free = parse_list(o.lambda);
    if (static_cast<int>(free.size()) != space.free_dim())
      throw IndexMismatch("expected " + std::to_string(space.free_dim()) + " free values of lambda");
  } else {
    for (int i = 0; i < space.free_dim(); ++i) free.push_back(i + 1);
  }
  auto offenders = condition_offenders(real, q);
  rep.check("condition-gC-not-gx", offenders.empty(), {{"offending_pairs", offenders.size()}});
  if (!offenders.empty()) return;
  PointedLifting l = pointed_lifting_generators(real, q, space.expand(free));
  json gens = json::array();
  for (const auto& g : l.generators)
    gens.push_back({{"class", class_labels(l.classes[g.cls], real.rack)},
                    {"b", g.b.to_string(l.names)},
                    {"g_C", real.group.label(g.g_C)},
                    {"lambda", to_string(g.lambda)}});
  rep.result = {{"free_values", io::rationals_to_json(free)}, {"generators", gens}};
}

void lift_copointed(const Options& o, Report& rep) {
  CopointedLambda cl{parse_copointed_family(o.family), parse_list(o.lambda)};
  CopointedLifting l = copointed_lifting_generators(cl);
  json fixed = json::array(), deformed = json::array();
  for (const auto& p : l.fixed) fixed.push_back(p.to_string(l.names));
  bool counit = true;
  for (const auto& d : l.deformed) {
    json f = json::object();
    for (int g = 0; g < l.group.size(); ++g) f[l.group.label(g)] = to_string(d.f[g]);
    deformed.push_back({{"element", l.rack.label(d.element)}, {"lhs", d.lhs.to_string(l.names)}, {"f", f}});
    counit = counit && is_zero(d.f[l.group.identity()]);
  }
  rep.result = {{"family", copointed_family_name(cl.family)}, {"fixed", fixed}, {"deformed", deformed}};
  rep.check("counit-vanishing", counit);
}

void realize_check(const Options& o, Report& rep) {
  PrincipalRealization r = load_realization(o);
  Cocycle2 q = o.cocycle == "auto" ? realization_cocycle(r) : load_cocycle(r.rack, o);
  rep.result["principal"] = audit_json(validate_principal(r, q, exec_of(o)), rep, "principal:");
  if (o.side != "both" && o.side != "pointed" && o.side != "copointed")
    throw InvalidInput("--side is pointed, copointed or both");
  for (Side s : {Side::Pointed, Side::Copointed}) {
    if (o.side != "both" && o.side != side_name(s)) continue;
    rep.result[side_name(s)] = audit_json(comatrix_action_audit(r, s, q, exec_of(o)), rep, std::string(side_name(s)) + ":");
  }
}

void realize_dual(const Options& o, Report& rep) {
  PrincipalRealization r = load_realization(o);
  DualBraidingReport d = dual_braiding_check(r);
  rep.result = {{"mismatches", d.mismatches}};
  rep.check("dual-braiding-equals-W", d.equal);
}

void realize_theta(const Options& o, Report& rep) {
  PrincipalRealization r = load_realization(o);
  ThetaReport t = theta_characters(r);
  json at = json::object();
  for (int z = 0; z < r.rack.size(); ++z)
    at[r.rack.label(z)] = t.evaluation_at[z] < 0 ? "not an evaluation" : r.group.label(t.evaluation_at[z]);
  rep.result = {{"evaluation_at", at}, {"faithful", t.faithful}, {"distinct", t.distinct},
                {"relation_checked", t.relation_checked}};
  rep.check("theta-relation", t.relation_failures == 0, {{"failures", t.relation_failures}});
  if (t.faithful) rep.check("theta-distinct", t.distinct);
}

json envelope(const std::string& command, const Options& o, bool seeded) {
  json j = {{"schema_version", io::kSchemaVersion}, {"tool", "rackhopf"}, {"version", kToolVersion}, {"command", command}};
  if (seeded) j["seed"] = o.seed;
  return j;
}

void emit(const json& j, const Options& o, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!o.json_out.empty()) {
    std::ofstream f(o.json_out);
    if (!f) throw InvalidInput("cannot write " + o.json_out);
    f << text;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rack, Nichols algebra and lifting computations over Q", "rackhopf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json-out", o.json_out, "Also write the report to this file");
  app.add_flag("--timings", o.timings, "Include wall-clock timings (reports are then not reproducible)");
  app.add_flag("--serial", o.serial, "Use the serial reference kernels");

  std::string command;
  std::function<void(Report&)> body;
  bool seeded = false;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<void(Report&)> fn,
                  bool uses_seed = false) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&, fn, uses_seed, parent, name] {
      command = parent->get_name() + " " + name;
      body = fn;
      seeded = uses_seed;
    });
    return c;
  };
  auto rack_opts = [&](CLI::App* c) {
    c->add_option("--rack", o.rack, "o2<n>, o44, d<m>, t<n> or a rack JSON file")->capture_default_str();
    c->add_option("--file", o.file, "Rack JSON file");
  };
  auto cocycle_opts = [&](CLI::App* c) {
    rack_opts(c);
    c->add_option("--cocycle", o.cocycle, "const:<r>, chi or a cocycle JSON file")->capture_default_str();
  };
  auto flavor_opt = [&](CLI::App* c) {
    c->add_option("--flavor", o.flavor, "V or W")->check(CLI::IsMember({"V", "W"}))->capture_default_str();
  };

  CLI::App* rack = app.add_subcommand("rack", "Rack axioms and properties");
  rack->require_subcommand(1);
  rack_opts(leaf(rack, "check", "Validate a rack", [&](Report& r) { rack_check(o, r, false); }));
  rack_opts(leaf(rack, "props", "Rack properties and inner group", [&](Report& r) { rack_check(o, r, true); }));

  CLI::App* coc = app.add_subcommand("cocycle", "2-cocycles");
  coc->require_subcommand(1);
  cocycle_opts(leaf(coc, "check", "Validate a cocycle", [&](Report& r) { cocycle_check(o, r); }));

  CLI::App* braid = app.add_subcommand("braid", "Braided vector spaces");
  braid->require_subcommand(1);
  {
    CLI::App* c = leaf(braid, "check", "Braid equation", [&](Report& r) { braid_check(o, r); });
    cocycle_opts(c);
    flavor_opt(c);
  }

  CLI::App* nichols = app.add_subcommand("nichols", "Quadratic relations and dimensions");
  nichols->require_subcommand(1);
  for (auto [name, help, hil] : {std::tuple{"dim", "Quotient dimension by the quadratic relations", false},
                                 std::tuple{"hilbert", "Hilbert series, optionally against the symmetrizer", true}}) {
    const bool h = hil;
    CLI::App* c = leaf(nichols, name, help, [&, h](Report& r) { nichols_dim(o, r, h); });
    cocycle_opts(c);
    flavor_opt(c);
    c->add_option("--max-deg", o.max_deg, "Degree cutoff for the completion")->capture_default_str();
    c->add_option("--max-basis", o.max_basis, "Basis size budget")->capture_default_str();
    if (h) c->add_flag("--oracle", o.oracle, "Compare with symmetrizer ranks up to degree 4");
  }
  {
    CLI::App* c = leaf(nichols, "j2", "Relations against ker(id + c)", [&](Report& r) { nichols_j2(o, r); });
    cocycle_opts(c);
    flavor_opt(c);
  }

  CLI::App* gb = app.add_subcommand("gb", "Groebner bases");
  gb->require_subcommand(1);
  {
    CLI::App* c = leaf(gb, "run", "Complete an ideal", [&](Report& r) { gb_run(o, r); });
    c->add_option("--file", o.file, "Ideal JSON file")->required();
    c->add_option("--max-deg", o.max_deg, "Degree cutoff")->capture_default_str();
    c->add_option("--max-basis", o.max_basis, "Basis size budget")->capture_default_str();
  }

  CLI::App* deform = app.add_subcommand("deform", "Deformed ideals");
  deform->require_subcommand(1);
  {
    CLI::App* c = leaf(deform, "verify", "Nonzero and flatness sampling", [&](Report& r) { deform_verify(o, r); }, true);
    c->add_option("--family", o.family, "Eminus, Echi, Etilde or GenericLambda")->capture_default_str();
    c->add_option("--n", o.n, "Transposition rack degree")->capture_default_str();
    c->add_option("--samples", o.samples, "Number of sampled parameter vectors")->capture_default_str();
    c->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    c->add_option("--file", o.file, "Pinned parameter JSON (object or array)");
    c->add_option("--max-deg", o.max_deg, "Degree cutoff")->capture_default_str();
    c->add_option("--chi-signs", o.chi_signs, "corrected or printed")->capture_default_str();
    c->add_option("--rack", o.rack, "Rack for GenericLambda")->capture_default_str();
    c->add_option("--cocycle", o.cocycle, "Cocycle for GenericLambda")->capture_default_str();
  }
  {
    CLI::App* c = leaf(deform, "audit", "Reference basis membership", [&](Report& r) { deform_audit(o, r); }, true);
    c->add_option("--samples", o.samples, "Number of specializations")->capture_default_str();
    c->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    c->add_option("--file", o.file, "Parameter JSON (object or array) instead of sampling");
    c->add_option("--variant", o.variant, "printed or corrected")->capture_default_str();
  }
  {
    CLI::App* c = leaf(deform, "params", "Admissible parameter spaces", [&](Report& r) { deform_params(o, r); });
    cocycle_opts(c);
  }

  CLI::App* lift = app.add_subcommand("lift", "Lifting generators");
  lift->require_subcommand(1);
  {
    CLI::App* c = leaf(lift, "pointed", "b_C - lambda_C(1 - g_C)", [&](Report& r) { lift_pointed(o, r); });
    c->add_option("--realization", o.realization, "o24-sgn, o24-chi, o44-sgn, o23-sgn or a JSON file")->capture_default_str();
    c->add_option("--file", o.file, "Realization JSON file");
    c->add_option("--lambda", o.lambda, "Comma-separated free values");
  }
  {
    CLI::App* c = leaf(lift, "copointed", "Copointed relations with f_x", [&](Report& r) { lift_copointed(o, r); });
    c->add_option("--family", o.family, "TranspMinus, TranspChi or FourCycles")->required();
    c->add_option("--lambda", o.lambda, "Comma-separated lambda per rack element")->required();
  }

  CLI::App* realize = app.add_subcommand("realize", "Principal realizations");
  realize->require_subcommand(1);
  auto real_opts = [&](CLI::App* c) {
    c->add_option("--realization", o.realization, "o24-sgn, o24-chi, o44-sgn, o23-sgn or a JSON file")->capture_default_str();
    c->add_option("--file", o.file, "Realization JSON file");
  };
  {
    CLI::App* c = leaf(realize, "check", "Datum axioms and comatrix audits", [&](Report& r) { realize_check(o, r); });
    real_opts(c);
    o.cocycle = "auto";
    c->add_option("--cocycle", o.cocycle, "Cocycle for the closed forms (auto: from the datum)")->capture_default_str();
    c->add_option("--side", o.side, "pointed, copointed or both")->capture_default_str();
  }
  real_opts(leaf(realize, "dual", "Dual braiding against W", [&](Report& r) { realize_dual(o, r); }));
  real_opts(leaf(realize, "theta", "Theta characters", [&](Report& r) { realize_theta(o, r); }));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? 0 : 2;
  }
  if (command.rfind("realize", 0) != 0 && o.cocycle == "auto") o.cocycle = "const:-1";

  json j = envelope(command, o, seeded);
  try {
    Report rep;
    const auto t0 = std::chrono::steady_clock::now();
    body(rep);
    j["result"] = rep.result;
    j["assertions"] = rep.assertions();
    j["status"] = rep.failed() ? "assertion_failed" : "ok";
    if (o.timings) j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(j, o, out);
    return rep.failed() ? 1 : 0;
  } catch (const InvalidInput& e) {
    j["status"] = "invalid_input";
    j["error"] = e.what();
    err << "error: " << e.what() << "\n";
    emit(j, o, out);
    return 2;
  } catch (const json::exception& e) {
    j["status"] = "invalid_input";
    j["error"] = e.what();
    err << "error: " << e.what() << "\n";
    emit(j, o, out);
    return 2;
  } catch (const BudgetExceeded& e) {
    j["status"] = "budget_exceeded";
    j["error"] = e.what();
    err << "error: " << e.what() << "\n";
    emit(j, o, out);
    return 3;
  } catch (const AssertionFailure& e) {
    j["status"] = "assertion_failed";
    j["error"] = e.what();
    err << "assertion failed: " << e.what() << "\n";
    emit(j, o, out);
    return 1;
  }
}

}  // namespace rackhopf

#include "rackhopf/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "rackhopf/errors.hpp"

namespace rackhopf::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("expected a fraction string or an integer, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of fractions");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

namespace {

int parse_small_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("bad " + what + " '" + s + "'");
  return std::stoi(s);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_field(const json& j, const char* key) {
  const json& v = field(j, key);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type");
  }
}

int symmetric_degree(const std::string& group) {
  if (group.size() < 2 || group[0] != 'S') throw InvalidInput("only symmetric groups S<n> are supported, got " + group);
  const int n = parse_small_int(group.substr(1), "group degree");
  if (n < 1 || n > 7) throw InvalidInput("group degree must be in [1, 7]");
  return n;
}

}  // namespace

Rack named_rack(const std::string& name, std::vector<Perm>* perms) {
  if (name == "o44") return four_cycle_rack(perms);
  if (name.size() >= 3 && name.rfind("o2", 0) == 0) {
    const int n = parse_small_int(name.substr(2), "rack name");
    if (n < 3 || n > 7) throw InvalidInput("transposition racks need 3 <= n <= 7");
    return transposition_rack(n, perms);
  }
  if (name.size() >= 2 && name[0] == 'd') {
    if (perms) perms->clear();
    return dihedral_quandle(parse_small_int(name.substr(1), "rack name"));
  }
  if (name.size() >= 2 && name[0] == 't') {
    if (perms) perms->clear();
    return trivial_rack(parse_small_int(name.substr(1), "rack name"));
  }
  throw InvalidInput("unknown rack '" + name + "' (expected o2<n>, o44, d<m> or t<n>)");
}

Rack rack_from_json(const json& j, std::vector<Perm>* perms) {
  if (j.is_string()) return named_rack(j.get<std::string>(), perms);
  if (!j.is_object()) throw InvalidInput("rack must be a name or an object");
  if (j.contains("table")) {
    auto table = get_field<std::vector<std::vector<int>>>(j, "table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get_field<std::vector<std::string>>(j, "labels");
    if (perms) perms->clear();
    const int n = static_cast<int>(table.size());
    return validate_rack(n, std::move(table), std::move(labels));
  }
  const int degree = symmetric_degree(get_field<std::string>(j, "group"));
  return conjugacy_rack(PermGroup::symmetric(degree), parse_cycles(get_field<std::string>(j, "seed"), degree), perms);
}

json rack_to_json(const Rack& r) {
  return {{"size", r.size()}, {"labels", r.labels()}, {"table", r.table()}};
}

Cocycle2 cocycle_from_json(const Rack& r, const json& j) {
  if (j.is_string()) return make_cocycle(r, j.get<std::string>());
  if (!j.is_object()) throw InvalidInput("cocycle must be a spec string or an object");
  if (j.contains("spec")) return make_cocycle(r, get_field<std::string>(j, "spec"));
  const json& rows = field(j, "values");
  if (!rows.is_array()) throw InvalidInput("cocycle values must be a matrix");
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) values.push_back(rationals_from_json(row));
  return validate_cocycle(r, std::move(values));
}

json cocycle_to_json(const Cocycle2& q) {
  json rows = json::array();
  for (const auto& row : q.values()) rows.push_back(rationals_to_json(row));
  return {{"values", rows}};
}

DeformParams params_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("parameter file must be an object");
  const Family family = parse_family(get_field<std::string>(j, "family"));
  if (!j.contains("params") || !field(j, "params").is_object()) throw InvalidInput("missing object 'params'");
  const json& p = field(j, "params");
  DeformParams out;
  out.family = family;
  switch (family) {
    case Family::Eminus:
      out.n = get_field<int>(p, "n");
      out.scalars = rationals_from_json(field(p, "alpha"));
      out.mu1 = rational_from_json(field(p, "mu1"));
      out.mu2 = rational_from_json(field(p, "mu2"));
      break;
    case Family::Echi:
      out.n = get_field<int>(p, "n");
      out.scalars = rationals_from_json(field(p, "alpha"));
      out.mu1 = rational_from_json(field(p, "mu"));
      if (p.contains("signs")) {
        const auto s = get_field<std::string>(p, "signs");
        if (s != "corrected" && s != "printed") throw InvalidInput("signs must be 'corrected' or 'printed'");
        out.chi_signs = s == "printed" ? ChiSigns::AsPrinted : ChiSigns::Corrected;
      }
      break;
    case Family::Etilde:
      out.n = 4;
      out.scalars = rationals_from_json(field(p, "beta"));
      out.mu1 = rational_from_json(field(p, "mu1"));
      out.mu2 = rational_from_json(field(p, "mu2"));
      break;
    case Family::GenericLambda: {
      Rack r = rack_from_json(field(p, "rack"));
      out.cocycle = cocycle_from_json(r, field(p, "cocycle"));
      out.scalars = rationals_from_json(field(p, "lambda"));
      out.flavor = p.contains("flavor") ? parse_flavor(get_field<std::string>(p, "flavor")) : Flavor::V;
      break;
    }
  }
  return out;
}

json params_to_json(const DeformParams& p) {
  json params;
  switch (p.family) {
    case Family::Eminus:
      params = {{"n", p.n}, {"alpha", rationals_to_json(p.scalars)}, {"mu1", to_string(p.mu1)}, {"mu2", to_string(p.mu2)}};
      break;
    case Family::Echi:
      params = {{"n", p.n},
                {"alpha", rationals_to_json(p.scalars)},
                {"mu", to_string(p.mu1)},
                {"signs", p.chi_signs == ChiSigns::AsPrinted ? "printed" : "corrected"}};
      break;
    case Family::Etilde:
      params = {{"beta", rationals_to_json(p.scalars)}, {"mu1", to_string(p.mu1)}, {"mu2", to_string(p.mu2)}};
      break;
    case Family::GenericLambda:
      params = {{"lambda", rationals_to_json(p.scalars)}, {"flavor", flavor_name(p.flavor)}};
      if (p.cocycle) {
        params["rack"] = rack_to_json(p.cocycle->rack());
        params["cocycle"] = cocycle_to_json(*p.cocycle);
      }
      break;
  }
  return {{"family", family_name(p.family)}, {"params", params}};
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {
    order_.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) order_[i] = static_cast<int>(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return names_[a].size() > names_[b].size(); });
  }

  FreePoly parse() {
    FreePoly p = sum();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
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
  int alphabet() const { return static_cast<int>(names_.size()); }

  FreePoly sum() {
    FreePoly acc(alphabet());
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else if (!eat('+') && !first)
        break;
      first = false;
      acc += product() * Rational(sign);
    }
    return acc;
  }

  FreePoly product() {
    FreePoly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  FreePoly factor() {
    skip();
    for (int g : order_) {
      const std::string& n = names_[g];
      if (s_.compare(i_, n.size(), n) == 0) {
        i_ += n.size();
        return FreePoly::generator(alphabet(), g);
      }
    }
    if (eat('(')) {
      FreePoly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
    if (start == i_) fail("expected a generator, a number or '('");
    return FreePoly::constant(alphabet(), parse_rational(s_.substr(start, i_ - start)));
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  std::vector<int> order_;
  std::size_t i_ = 0;
};

}  // namespace

FreePoly parse_free_poly(const std::string& text, const std::vector<std::string>& names) {
  if (names.empty() || names.size() > 255) throw InvalidInput("between 1 and 255 generator names are required");
  return PolyParser(text, names).parse();
}

IdealSpec ideal_from_json(const json& j) {
  IdealSpec out;
  out.names = get_field<std::vector<std::string>>(j, "names");
  for (const auto& n : out.names)
    if (n.empty()) throw InvalidInput("generator names must be nonempty");
  for (const auto& text : get_field<std::vector<std::string>>(j, "generators"))
    out.generators.push_back(parse_free_poly(text, out.names));
  return out;
}

PrincipalRealization realization_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("realization must be an object");
  const int degree = symmetric_degree(get_field<std::string>(j, "group"));
  FiniteGroup group = FiniteGroup::symmetric(degree);
  std::vector<Perm> rack_perms;
  Rack rack = rack_from_json(field(j, "rack"), &rack_perms);
  std::vector<Perm> g;
  if (j.contains("g")) {
    for (const auto& s : get_field<std::vector<std::string>>(j, "g")) g.push_back(parse_cycles(s, degree));
  } else {
    g = rack_perms;
  }
  if (static_cast<int>(g.size()) != rack.size()) throw InvalidInput("'g' needs one permutation per rack element");
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (g[a] == g[b]) throw InvalidInput("'g' images must be distinct to define the conjugation action");
  const json& chi = field(j, "chi");
  if (chi.is_string()) return conjugation_realization(group, rack, g, chi.get<std::string>());
  PrincipalRealization base = conjugation_realization(group, rack, g, "const:1");
  std::vector<std::vector<Rational>> values;
  for (const auto& row : chi) values.push_back(rationals_from_json(row));
  return make_realization(base.group, base.rack, base.action, base.g, std::move(values));
}

json quotient_dim_to_json(const QuotientDim& d) {
  switch (d.kind) {
    case QuotientDim::Kind::Finite: return d.value;
    case QuotientDim::Kind::Infinite: return "infinite";
    case QuotientDim::Kind::UnknownTruncated: return "unknown (truncated)";
  }
  return nullptr;
}

}  // namespace rackhopf::io

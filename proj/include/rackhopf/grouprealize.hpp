#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackhopf/braided.hpp"
#include "rackhopf/cocycle.hpp"
#include "rackhopf/parallel.hpp"
#include "rackhopf/perm.hpp"
#include "rackhopf/rack.hpp"

namespace rackhopf {

// ---- kG and k^G with basis-indexed structure maps ----

enum class HopfKind { GroupAlgebra, FunctionAlgebra };
const char* hopf_kind_name(HopfKind k);

// Coordinates in the group basis (kG) or the δ basis (k^G), indexed like the group elements.
using HopfElement = std::vector<Rational>;
// A function on G; same storage as an element of k^G.
using GroupFunction = std::vector<Rational>;

class HopfAlgebra {
 public:
  HopfAlgebra(FiniteGroup group, HopfKind kind);

  HopfKind kind() const { return kind_; }
  const FiniteGroup& group() const { return group_; }
  int dim() const { return group_.size(); }

  HopfElement zero() const { return HopfElement(static_cast<std::size_t>(dim())); }
  HopfElement unit() const;
  HopfElement basis(int i) const;
  HopfElement mul(const HopfElement& a, const HopfElement& b) const;
  // Δ(b_i) = Σ b_j ⊗ b_k over the returned pairs (all coefficients are 1 for both algebras).
  const std::vector<std::pair<int, int>>& coproduct(int i) const { return coproduct_[i]; }
  Rational counit(const HopfElement& a) const;
  HopfElement antipode(const HopfElement& a) const;

  // Associativity, unit, coassociativity, counit and antipode laws on basis elements.
  bool check_axioms() const;

 private:
  FiniteGroup group_;
  HopfKind kind_;
  std::vector<std::vector<std::pair<int, int>>> coproduct_;
};

// ---- principal realizations ----

struct PrincipalRealization {
  FiniteGroup group;
  Rack rack;
  std::vector<std::vector<int>> action;     // action[h][x] = h·x
  std::vector<int> g;                       // degree map, group indices
  std::vector<std::vector<Rational>> chi;   // chi[x][h] = χ_x(h)
};

// Checks table shapes and that the action rows are permutations; the datum axioms are left to
// validate_principal. Throws InvalidInput.
PrincipalRealization make_realization(FiniteGroup group, Rack rack, std::vector<std::vector<int>> action,
                                      std::vector<int> g, std::vector<std::vector<Rational>> chi);

// Conjugation realization of a conjugacy-class rack inside `group` with g = inclusion.
// chi: "sgn" (χ_x = sign for every x), "ms-chi" (transpositions only: χ_(ij)(h) = +1 iff h(i) < h(j)),
// or "const:<r>" for a constant character value (a group homomorphism only when r = ±1 and trivial).
PrincipalRealization conjugation_realization(const FiniteGroup& group, const Rack& rack,
                                             const std::vector<Perm>& perms, const std::string& chi);

// "o24-sgn", "o24-chi", "o44-sgn", "o23-sgn" over S_n.
PrincipalRealization named_realization(const std::string& name);

// q_{ij} = χ_j(g_i). Throws like validate_cocycle when the values are not a cocycle.
Cocycle2 realization_cocycle(const PrincipalRealization& r);

struct AxiomCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing tuple in iteration order
  bool ok() const { return failures == 0; }
};

struct AuditReport {
  std::vector<AxiomCheck> checks;
  bool all() const;
};

// g(h·i) = h g(i) h⁻¹, g(i)·j = i▷j, χ_i(g(j)) = q_{ji}, χ_i(ht) = χ_i(t) χ_{t·i}(h), plus the
// action being a group action.
AuditReport validate_principal(const PrincipalRealization& r, const Cocycle2& q, Exec exec = Exec::Parallel);

// ---- Yetter-Drinfeld structure on the span of {v_x} ----

enum class Side { Pointed, Copointed };
const char* side_name(Side s);

struct YDStructure {
  HopfAlgebra hopf;
  // Coaction λ(v_x) = Σ_y e[x][y] ⊗ v_y.
  std::vector<std::vector<HopfElement>> e;
  // mu[x][y][i]: coefficient of v_y in b_i·v_x.
  std::vector<std::vector<std::vector<Rational>>> mu;

  int size() const { return static_cast<int>(e.size()); }
  Rational act(int x, int y, const HopfElement& h) const;
};

// Pointed: V over kG with h·v_x = χ_x(h) v_{h·x}, e_xy = δ_xy g_x.
// Copointed: the image under the dual functor, a module over k^G with
// δ_t·w_x = ⟨δ_t, S(g_x)⟩ w_x and e_xy(t) = χ_x(t⁻¹)[t⁻¹·x = y].
YDStructure yd_structure(const PrincipalRealization& r, Side side);

std::vector<std::vector<HopfElement>> comatrix_elements(const PrincipalRealization& r, Side side);

// Action formula on e_zt and S(e_zt), the comatrix relation, the YD compatibility over the basis of
// H, and the comatrix coalgebra law. Closed forms are written in terms of `q`; passing a cocycle
// that does not belong to the realization produces failures with witnesses.
AuditReport comatrix_action_audit(const PrincipalRealization& r, Side side, const Cocycle2& q,
                                  Exec exec = Exec::Parallel);

struct DualBraidingReport {
  bool equal = false;
  std::size_t mismatches = 0;  // differing matrix entries
};

// Braiding of the copointed YD module, c(w⊗w') = w_(-1)·w' ⊗ w_(0), against the W braiding of the
// realization cocycle.
DualBraidingReport dual_braiding_check(const PrincipalRealization& r);

struct ThetaReport {
  // θ_z = μ_zz on k^G; the group element it evaluates at, or -1 when it is not an evaluation.
  std::vector<int> evaluation_at;
  std::size_t relation_checked = 0;
  std::size_t relation_failures = 0;  // θ_zθ_t ≠ θ_tθ_{t▷z} under convolution
  bool distinct = false;
  bool faithful = false;
  bool ok() const { return relation_failures == 0 && (distinct || !faithful); }
};

ThetaReport theta_characters(const PrincipalRealization& r);

// Group homomorphisms G → {±1} (the rational one-dimensional characters, i.e. group-likes of k^G).
std::vector<std::vector<int>> rational_linear_characters(const FiniteGroup& g);

}  // namespace rackhopf

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rackhopf/braided.hpp"
#include "rackhopf/cocycle.hpp"
#include "rackhopf/groebner.hpp"
#include "rackhopf/quadrel.hpp"

namespace rackhopf {

enum class Family { Eminus, Echi, Etilde, GenericLambda };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Sign convention for the three-term χ relations; see README ("χ relations").
enum class ChiSigns { Corrected, AsPrinted };

struct DeformParams {
  Family family = Family::Eminus;
  int n = 4;  // transposition families only
  // α per transposition (Eminus, Echi), β per 4-cycle (Etilde), or λ per R' class (GenericLambda),
  // in rack element / class order.
  std::vector<Rational> scalars;
  Rational mu1 = 0, mu2 = 0;  // Echi uses mu1 as its single μ
  ChiSigns chi_signs = ChiSigns::Corrected;
  std::optional<Cocycle2> cocycle;  // GenericLambda only
  Flavor flavor = Flavor::V;        // GenericLambda only
};

struct DeformedIdeal {
  Rack rack;
  std::vector<std::string> names;  // generator display names, e.g. "x(12)"
  std::vector<FreePoly> generators;
};

// Throws IndexMismatch when the scalar vector does not match the rack.
DeformedIdeal build_deformed_ideal(const DeformParams& p);

DeformParams zero_params(Family family, int n, const std::optional<Cocycle2>& cocycle = std::nullopt);

// Deterministic "alpha=[..] mu1=.. mu2=.." rendering.
std::string describe_params(const DeformParams& p);

// Generators of the undeformed ideal for the transposition families (n) and the 4-cycle family.
DeformedIdeal nichols_presentation(Family family, int n, ChiSigns signs = ChiSigns::Corrected);

enum class SampleKind { Generic, Pointed, Copointed, Pinned };
const char* sample_kind_name(SampleKind k);

// Reproducible parameter draw, a function of (seed, index) only. Generic draws for Etilde keep
// β_σ = β_{σ^{-1}}.
DeformParams sample_params(Family family, int n, SampleKind kind, std::uint64_t seed, std::uint64_t index,
                           const std::optional<Cocycle2>& cocycle = std::nullopt);

struct SampleResult {
  std::size_t index = 0;
  SampleKind kind = SampleKind::Generic;
  std::string params;
  bool trivial = false;
  bool conclusive = true;
  QuotientDim dim;
  std::optional<std::uint64_t> expected;  // set for admissible samples
  bool flat = true;                       // dim == expected when expected is set
  std::size_t basis_size = 0;
  double seconds = 0;
};

struct VerifyReport {
  Family family = Family::Eminus;
  int n = 4;
  std::uint64_t seed = 0;
  QuotientDim zero_dim;
  std::vector<SampleResult> samples;
  bool all_nonzero = true;
  bool all_flat = true;
};

struct VerifyOptions {
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::vector<DeformParams> pinned;
  GroebnerOptions groebner;
  Exec exec = Exec::Parallel;
  ChiSigns chi_signs = ChiSigns::Corrected;
  std::optional<Cocycle2> cocycle;  // GenericLambda only
};

// Samples cycle through generic / pointed-admissible / copointed-admissible kinds (GenericLambda:
// admissible kinds only). Throws NonzeroCheckFailed on a trivial quotient.
VerifyReport verify_nonzero(Family family, int n, const VerifyOptions& options);

// ---- reference Gröbner basis elements for E_α(μ1, μ2), n = 4 ----

// A polynomial with symbolic parameter factors (a12.., m1, m2) over the O_2^4 generators x12...
struct ParamTerm {
  Rational coeff;
  std::vector<std::string> params;  // sorted multiset
  Word word;
};
struct ParamPoly {
  std::vector<ParamTerm> terms;
  int degree() const;  // longest word
  // |word| + 2·#params is the same for every term.
  bool weight_homogeneous() const;
  FreePoly specialize(const std::map<std::string, Rational>& values, int alphabet) const;
};

// Grammar: sum of products of factors; factor = integer | name[^k] | '(' sum ')'.
// Generator names are x<ij>, parameters a<ij>, m1, m2.
ParamPoly parse_param_poly(const std::string& text, const Rack& transpositions);

const std::vector<std::string>& reference_basis_text();

// Printed: the reference elements as read. Corrected: element 12 with its stray -m1^2 moved from the
// x14*x34 coefficient to the x14*x12 coefficient (see README).
enum class BasisVariant { Printed, Corrected };
std::vector<std::string> reference_basis(BasisVariant variant);

struct AppendixEntry {
  std::size_t index = 0;
  bool weight_consistent = true;
  bool reduces_to_zero = false;
  std::string residue;  // normal form when nonzero
};

struct AppendixReport {
  std::string params;
  BasisVariant variant = BasisVariant::Printed;
  std::vector<AppendixEntry> entries;
  bool all_pass = true;
};

// Checks membership of every reference element in the ideal of E_α(μ1,μ2), n = 4, at the given
// parameters. With perturb_control, the first element's x12*x13*x12 coefficient is negated.
AppendixReport appendix_membership_audit(const DeformParams& params, bool perturb_control = false,
                                         BasisVariant variant = BasisVariant::Printed,
                                         GroebnerOptions options = {});

// ---- isomorphism classes ----

struct IsoWitness {
  bool equal = false;
  Rational mu = 0;
  int theta = -1;  // index into S_4 elements of the conjugating element, copointed only
};

// Copointed: λ' = μ(λ_{θ(x)}) for some μ ≠ 0 and inner automorphism θ of S_4 (rack = O_2^4 or O_4^4).
// Pointed: projective equality of the vectors.
IsoWitness iso_class_equal_copointed(const std::vector<Rational>& lambda, const std::vector<Rational>& lambda2,
                                     const Rack& rack, const std::vector<Perm>& perms);
IsoWitness iso_class_equal_pointed(const std::vector<Rational>& lambda, const std::vector<Rational>& lambda2);

}  // namespace rackhopf

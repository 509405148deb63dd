// The family Sigma of dimension vectors of simple representations inside an
// annihilated root family: a positive root x lies in Sigma when every way of
// writing x as a sum of two or more annihilated positive roots strictly drops
// the total p-value. Covers the zero parameter (every root annihilated) and
// subgeneric parameters (annihilator spanned by one primitive root).
#pragma once

#include "nwg/roots.hpp"

namespace nwg {

struct SigmaSpace {
  Quiver q;
  bool every_root = true;  // zero parameter: every root is annihilated
  // Subgeneric data: a root x is annihilated iff x - x_f * reference is
  // rationally proportional to generator, where f is the framing vertex
  // (the last index), reference = v + alpha_f and generator = v1 extended by 0.
  Vec reference;
  Vec generator;

  bool annihilates(const Vec& x) const;
  // Annihilated positive roots <= bound, lexicographic.
  std::vector<Vec> members_leq(const Vec& bound) const;
};

SigmaSpace zero_parameter_space(const Quiver& q);

// A framed setting together with the primitive root spanning the annihilator
// of a subgeneric parameter.
struct SubgenericContext {
  FramedSetting fs;
  Vec v1;
  RootKind v1_kind;
  Quiver qx;    // framed quiver
  Vec tilde_v;  // v + alpha_inf
  Vec v1x;      // v1 extended by 0
};

// Validates that v1 is a primitive positive root of fs.q with v1 <= fs.v.
SubgenericContext make_subgeneric(const FramedSetting& fs, const Vec& v1);

SigmaSpace subgeneric_space(const SubgenericContext& ctx);

// Definitional membership test (decomposition search with memoization).
bool in_sigma(const SigmaSpace& space, const Vec& x);

// n * v1 in Sigma. Closed form: n = 1 for real or isotropic v1; every n >= 1
// for non-isotropic v1 (p is strictly superadditive on its multiples).
bool sigma_multiple(const SubgenericContext& ctx, Int n);

// tilde_v - n * v1 in Sigma. Closed form obtained by noting that a
// decomposition has exactly one part with framing coefficient 1 and all other
// parts are multiples of v1; the best tail p-value per kind is explicit.
bool sigma_complement(const SubgenericContext& ctx, Int n);

struct CanonicalPart {
  Vec root;
  Int multiplicity;
};

// The coarsest decomposition of x into Sigma members: find any decomposition,
// then merge sub-multisets whose sum lies in Sigma until none remains. Every
// decomposition refines the canonical one, so the fixed point is unique.
// Throws empty_variety_error when x admits no decomposition at all.
std::vector<CanonicalPart> canonical_decomposition(const SigmaSpace& space, const Vec& x);

// One factor of the product decomposition: mult-th symmetric power of the
// variety attached to root. Resolvable iff root is indivisible or has content
// 2 with p(root/2) = 2. Parts with mult >= 2 are real or isotropic and those
// are always indivisible, so the multiplicity imposes nothing extra.
bool part_admits_resolution(const Quiver& q, const Vec& root);

// All canonical parts of x pass part_admits_resolution.
bool admits_symplectic_resolution(const SigmaSpace& space, const Vec& x);

// The affinization of the subgeneric variety equals the affine quotient iff
// v1 is imaginary or <nu, v1> >= -1. Always true for dominant nu.
bool affinization_is_affine(const SubgenericContext& ctx);

}  // namespace nwg

// Root classification and enumeration for quivers with loops, after Kac:
// positive roots are the Weyl orbit of the loop-free simples together with the
// orbit of the fundamental region (connected support, nonpositive pairing with
// every loop-free simple).
#pragma once

#include <optional>

#include "nwg/quiver.hpp"

namespace nwg {

enum class RootKind { real, isotropic, nonisotropic };

const char* to_string(RootKind k);

struct ClassifiedRoot {
  Vec root;
  RootKind kind;
};

// Simple reflection at a loop-free vertex: s_i(a) = a - (a, alpha_i) alpha_i.
// Throws contract_error when vertex i carries a loop.
Vec reflect(const Quiver& q, const Vec& a, int i);

// Root test by reflection descent. Returns the kind when a (or -a) is a root,
// std::nullopt otherwise. a = 0 is not a root.
std::optional<RootKind> classify_root(const Quiver& q, const Vec& a);

// True when a is a root and a/k is not a root for any integer k >= 2.
bool is_primitive_root(const Quiver& q, const Vec& a);

// All positive roots a with a <= bound componentwise, in lexicographic order.
// positive_roots_leq may parallelize the scan; the serial variant is the
// reference kernel. Their outputs are identical.
std::vector<ClassifiedRoot> positive_roots_leq(const Quiver& q, const Vec& bound);
std::vector<ClassifiedRoot> positive_roots_leq_serial(const Quiver& q, const Vec& bound);

// Lexicographic iteration over the box 0 <= x <= bound (first coordinate most
// significant). Used by the scan kernels to partition work deterministically.
struct Box {
  Vec bound;
  size_t size() const;        // product of (bound_i + 1); throws input_error when too large
  Vec at(size_t index) const; // index -> vector, lexicographic
};

struct ReductionTrace {
  std::vector<int> word;  // reflected base vertices, in application order
  Vec v_before;
  Vec v_after;

  bool operator==(const ReductionTrace&) const = default;
};

// Iterates v <- s_i * v (the reflection acting on v + alpha_inf in the framed
// quiver) at the smallest loop-free base vertex with positive pairing, until
// <nu, alpha_i> >= 0 everywhere. Throws empty_variety_error when v + alpha_inf
// is not a root of the framed quiver.
FramedSetting dominance_reduce(const FramedSetting& fs, ReductionTrace* trace = nullptr);

}  // namespace nwg

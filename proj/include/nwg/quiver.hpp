// Quivers with loops and multi-edges, the symmetrized Euler (Tits) form, and framed settings.
// A quiver here is an undirected multigraph: orientation never enters the form.
#pragma once

#include <optional>

#include "nwg/base.hpp"

namespace nwg {

struct Quiver {
  int n = 0;                            // vertex count
  std::vector<Int> loops;               // loops[i] >= 0, size n
  std::vector<std::vector<Int>> edges;  // n x n, symmetric, zero diagonal, entries >= 0

  static Quiver make(int n) {
    Quiver q;
    q.n = n;
    q.loops.assign(n, 0);
    q.edges.assign(n, std::vector<Int>(n, 0));
    return q;
  }

  void add_edge(int i, int j, Int mult = 1) {
    edges[i][j] += mult;
    edges[j][i] += mult;
  }

  bool loop_free(int i) const { return loops[i] == 0; }

  bool operator==(const Quiver&) const = default;

  // Throws input_error on structural violations.
  void validate() const;
};

// (a,b) = sum_i (2 - 2 loops_i) a_i b_i - sum_{i != j} edges_ij a_i b_j.
// Symmetric; diagonal values are even.
Int tits_form(const Quiver& q, const Vec& a, const Vec& b);

// (a, alpha_i) without building a unit vector.
Int pairing_with_simple(const Quiver& q, const Vec& a, int i);

// p(a) = 1 - (a,a)/2; dimension of the parameter space of simples when a is a root.
Int p_value(const Quiver& q, const Vec& a);

// True when the support of a (vertices with a_i != 0) is nonempty and connected via edges.
bool support_connected(const Quiver& q, const Vec& a);

// A quiver with dimension vector v and framing vector w, both over the same vertex set.
struct FramedSetting {
  Quiver q;
  Vec v;
  Vec w;

  bool operator==(const FramedSetting&) const = default;

  void validate() const;  // sizes match, v >= 0, w >= 0
};

// Drops vertices with v_i = 0 (their framing is irrelevant: no nonzero maps touch them).
// If kept != nullptr it receives the retained original vertex indices, in order.
FramedSetting normalized(const FramedSetting& fs, std::vector<int>* kept = nullptr);

// The framed quiver: one extra vertex (index n) joined to vertex i by w_i edges, no loop.
Quiver extended_quiver(const FramedSetting& fs);

// v extended by 1 at the framing vertex.
Vec extended_dim(const FramedSetting& fs);

// x over the base vertices, extended by 0 at the framing vertex.
Vec embed(const Vec& x);

// Restriction back to the base vertices.
Vec restrict_to_base(const Vec& x);

// <nu, x> = w.x - (v, x); the pairing of the canonical deformation direction against x.
Int nu_pairing(const FramedSetting& fs, const Vec& x);

// <nu, alpha_i> >= 0 for every loop-free vertex i (loopy vertices impose nothing).
bool nu_dominant(const FramedSetting& fs);

}  // namespace nwg

// Quiver builders and random-corpus generators shared by the test binaries.
#pragma once

#include <random>

#include "nwg/quiver.hpp"

namespace nwg::testing {

inline Quiver path_quiver(int n) {
  Quiver q = Quiver::make(n);
  for (int i = 0; i + 1 < n; ++i) q.add_edge(i, i + 1);
  return q;
}

inline Quiver cycle_quiver(int n) {
  Quiver q = path_quiver(n);
  q.add_edge(n - 1, 0);
  return q;
}

inline Quiver jordan_quiver(Int loops = 1) {
  Quiver q = Quiver::make(1);
  q.loops[0] = loops;
  return q;
}

// Two vertices joined by `mult` edges; mult >= 3 is wild.
inline Quiver kronecker_quiver(Int mult) {
  Quiver q = Quiver::make(2);
  q.add_edge(0, 1, mult);
  return q;
}

// Triangle 0-1-2 with a pendant vertex 3 on 0; the smallest wild quiver used
// by the multiply-laced fixtures.
inline Quiver triangle_pendant_quiver() {
  Quiver q = Quiver::make(4);
  q.add_edge(0, 1);
  q.add_edge(1, 2);
  q.add_edge(0, 2);
  q.add_edge(0, 3);
  return q;
}

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  return d(rng);
}

// Connected random quiver: a random spanning tree plus a few extra edge units
// and loops. Caps: `max_loops` per vertex, edge multiplicities grow by the
// extra units only.
inline Quiver random_quiver(Rng& rng, int max_n, Int max_loops) {
  int n = (int)rand_int(rng, 1, max_n);
  Quiver q = Quiver::make(n);
  for (int i = 1; i < n; ++i) q.add_edge(i, (int)rand_int(rng, 0, i - 1));
  Int extra = rand_int(rng, 0, n);
  for (Int e = 0; e < extra; ++e) {
    int i = (int)rand_int(rng, 0, n - 1);
    int j = (int)rand_int(rng, 0, n - 1);
    if (i != j) q.add_edge(i, j);
  }
  for (int i = 0; i < n; ++i) q.loops[i] = rand_int(rng, 0, max_loops);
  return q;
}

inline Vec random_vec(Rng& rng, int n, Int lo, Int hi) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = rand_int(rng, lo, hi);
  return v;
}

// Random framed setting with every v entry >= 1. Not necessarily dominant.
inline FramedSetting random_setting(Rng& rng, int max_n, Int max_loops, Int max_v, Int max_w) {
  FramedSetting fs;
  fs.q = random_quiver(rng, max_n, max_loops);
  fs.v = random_vec(rng, fs.q.n, 1, max_v);
  fs.w = random_vec(rng, fs.q.n, 0, max_w);
  return fs;
}

}  // namespace nwg::testing

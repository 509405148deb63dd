#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nwg/quiver.hpp"
#include "test_util.hpp"

using namespace nwg;
using namespace nwg::testing;

TEST_CASE("tits form on the path quiver") {
  Quiver q = path_quiver(3);
  Vec a{1, 0, 0}, b{0, 1, 0}, c{1, 1, 1};
  CHECK(tits_form(q, a, a) == 2);
  CHECK(tits_form(q, a, b) == -1);
  CHECK(tits_form(q, a, Vec{0, 0, 1}) == 0);
  CHECK(tits_form(q, c, c) == 2);
  CHECK(p_value(q, c) == 0);
}

TEST_CASE("diagonal values by loop count") {
  for (Int l = 0; l <= 3; ++l) {
    Quiver q = jordan_quiver(l);
    CHECK(tits_form(q, Vec{1}, Vec{1}) == 2 - 2 * l);
  }
}

TEST_CASE("symmetry and bilinearity on random vectors") {
  Rng rng(20240901);
  for (int t = 0; t < 200; ++t) {
    Quiver q = random_quiver(rng, 4, 2);
    Vec a = random_vec(rng, q.n, -3, 3);
    Vec b = random_vec(rng, q.n, -3, 3);
    Vec c = random_vec(rng, q.n, -3, 3);
    CHECK(tits_form(q, a, b) == tits_form(q, b, a));
    CHECK(tits_form(q, add(a, b), c) == tits_form(q, a, c) + tits_form(q, b, c));
    Int k = rand_int(rng, -2, 2);
    CHECK(tits_form(q, scale(k, a), b) == k * tits_form(q, a, b));
  }
}

TEST_CASE("p is superadditive exactly when -(a,b) > 1") {
  Rng rng(20240902);
  for (int t = 0; t < 300; ++t) {
    Quiver q = random_quiver(rng, 4, 2);
    Vec a = random_vec(rng, q.n, 0, 3);
    Vec b = random_vec(rng, q.n, 0, 3);
    Int pab = p_value(q, add(a, b));
    Int sum = p_value(q, a) + p_value(q, b);
    CHECK(pab == sum - 1 - tits_form(q, a, b));
    CHECK((pab > sum) == (-tits_form(q, a, b) > 1));
  }
}

TEST_CASE("pairing_with_simple matches the form against a unit vector") {
  Rng rng(20240903);
  for (int t = 0; t < 100; ++t) {
    Quiver q = random_quiver(rng, 4, 2);
    Vec a = random_vec(rng, q.n, -3, 3);
    for (int i = 0; i < q.n; ++i)
      CHECK(pairing_with_simple(q, a, i) == tits_form(q, a, unit_vec(q.n, i)));
  }
}

TEST_CASE("support connectivity") {
  Quiver q = path_quiver(4);
  CHECK(support_connected(q, Vec{1, 1, 1, 1}));
  CHECK(support_connected(q, Vec{0, 1, 1, 0}));
  CHECK_FALSE(support_connected(q, Vec{1, 0, 1, 0}));
  CHECK_FALSE(support_connected(q, Vec{0, 0, 0, 0}));
  CHECK(support_connected(q, Vec{0, 0, 0, 2}));
}

TEST_CASE("quiver validation rejects malformed data") {
  Quiver q = path_quiver(2);
  q.loops[0] = -1;
  CHECK_THROWS_AS(q.validate(), input_error);

  q = path_quiver(2);
  q.edges[0][1] = 2;  // asymmetric
  CHECK_THROWS_AS(q.validate(), input_error);

  q = path_quiver(2);
  q.edges[0][0] = 1;  // diagonal entry instead of a loop
  CHECK_THROWS_AS(q.validate(), input_error);

  q = path_quiver(2);
  q.loops.pop_back();
  CHECK_THROWS_AS(q.validate(), input_error);
}

TEST_CASE("framed setting validation") {
  FramedSetting fs{path_quiver(2), Vec{1, 1}, Vec{0, 0}};
  fs.validate();
  fs.v = Vec{1, -1};
  CHECK_THROWS_AS(fs.validate(), input_error);
  fs.v = Vec{1};
  CHECK_THROWS_AS(fs.validate(), input_error);
}

TEST_CASE("normalization drops v = 0 vertices") {
  FramedSetting fs{path_quiver(4), Vec{1, 0, 2, 1}, Vec{1, 5, 0, 2}};
  std::vector<int> kept;
  FramedSetting r = normalized(fs, &kept);
  CHECK(kept == std::vector<int>{0, 2, 3});
  CHECK(r.q.n == 3);
  CHECK(r.v == Vec{1, 2, 1});
  CHECK(r.w == Vec{1, 0, 2});
  // vertex 1 is gone, so 0 and 2 are no longer joined
  CHECK(r.q.edges[0][1] == 0);
  CHECK(r.q.edges[1][2] == 1);
}

TEST_CASE("normalization of the zero vector keeps nothing") {
  FramedSetting fs{path_quiver(2), Vec{0, 0}, Vec{1, 1}};
  FramedSetting r = normalized(fs);
  CHECK(r.q.n == 0);
  CHECK(r.v.empty());
}

TEST_CASE("extended quiver wires the framing vertex") {
  FramedSetting fs{path_quiver(3), Vec{1, 2, 1}, Vec{2, 0, 1}};
  Quiver qx = extended_quiver(fs);
  CHECK(qx.n == 4);
  CHECK(qx.loop_free(3));
  CHECK(qx.edges[0][3] == 2);
  CHECK(qx.edges[1][3] == 0);
  CHECK(qx.edges[2][3] == 1);
  CHECK(qx.edges[0][1] == 1);

  Vec tv = extended_dim(fs);
  CHECK(tv == Vec{1, 2, 1, 1});
  CHECK(embed(fs.v) == Vec{1, 2, 1, 0});
  CHECK(restrict_to_base(tv) == fs.v);
}

TEST_CASE("nu pairing is w.x minus the form") {
  Rng rng(20240904);
  for (int t = 0; t < 100; ++t) {
    FramedSetting fs = random_setting(rng, 4, 2, 3, 2);
    Vec x = random_vec(rng, fs.q.n, 0, 3);
    CHECK(nu_pairing(fs, x) == dot(fs.w, x) - tits_form(fs.q, fs.v, x));
  }
}

TEST_CASE("dominance of the parameter") {
  // A1, v=1, w=2: <nu, alpha> = 2 - 2 = 0
  FramedSetting fs{path_quiver(1), Vec{1}, Vec{2}};
  CHECK(nu_dominant(fs));
  fs.w = Vec{1};
  CHECK_FALSE(nu_dominant(fs));
  // loopy vertices impose no condition
  FramedSetting fl{jordan_quiver(1), Vec{3}, Vec{0}};
  CHECK(nu_dominant(fl));
}

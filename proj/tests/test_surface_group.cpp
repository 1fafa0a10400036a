#include "vassiliev/surface_group.hpp"

#include <random>

#include "doctest.h"

using namespace vb;

namespace {

SurfWord random_word(std::mt19937& rng, int g, int len) {
  std::uniform_int_distribution<int> letter(1, 2 * g);
  std::uniform_int_distribution<int> sign(0, 1);
  SurfWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(letter(rng) * (sign(rng) ? 1 : -1));
  return w;
}

// Null words built as products of conjugated relators, so their nullity is
// known without trusting the code under test.
SurfWord random_null_word(std::mt19937& rng, const SurfaceGroup& G, int faces,
                          int anchor_len) {
  std::uniform_int_distribution<int> alen(0, anchor_len);
  std::uniform_int_distribution<int> sgn(0, 1);
  SurfWord w;
  for (int f = 0; f < faces; ++f) {
    SurfWord a = random_word(rng, G.genus(), alen(rng));
    SurfWord r = sgn(rng) ? G.rel() : fw_inv(G.rel());
    w = fw_concat(w, a);
    w = fw_concat(w, r);
    w = fw_concat(w, fw_inv(a));
  }
  return w;
}

}  // namespace

TEST_CASE("free word helpers") {
  CHECK(fw_reduce({1, -1}) == SurfWord{});
  CHECK(fw_reduce({1, 2, -2, -1, 3}) == SurfWord{3});
  CHECK(fw_inv(SurfWord{1, -2}) == SurfWord{2, -1});
  CHECK(fw_concat({1, 2}, {-2, 3}) == SurfWord{1, 3});
}

TEST_CASE("relator shape") {
  CHECK(surf_relator(1) == SurfWord{1, 2, -1, -2});
  CHECK(surf_relator(2) == SurfWord{1, 2, 3, 4, -1, -2, -3, -4});
}

TEST_CASE("torus normal form is exponent pair") {
  SurfaceGroup G(1);
  CHECK(G.nf({}) == SurfWord{});
  CHECK(G.nf({2, 1}) == SurfWord{1, 2});
  CHECK(G.nf({1, -2, -1}) == SurfWord{-2});
  CHECK(G.nf({1, 2, -1, -2}) == SurfWord{});
  CHECK(G.nf({-1, -1, 2, 1}) == SurfWord{-1, 2});
  CHECK(G.is_null(surf_relator(1)));
  CHECK_FALSE(G.is_null({1}));
}

TEST_CASE("genus 2 normal form pinned values") {
  SurfaceGroup G(2);
  CHECK(G.nf({1, 2, 3, 4, -1}) == SurfWord{4, 3, 2});
  CHECK(G.nf({1, 2, 3, 4, -1, -2}) == SurfWord{4, 3});
  CHECK(G.nf({2, 3, 4, -1, -2, -3}) == SurfWord{-1, 4});
  CHECK(G.nf({1, 1, 2, 2}) == SurfWord{1, 1, 2, 2});
  CHECK(G.nf({3, 4, 1, 2}) == SurfWord{3, 4, 1, 2});
  CHECK(G.nf({1, 2, 1, 2}) == SurfWord{1, 2, 1, 2});
  CHECK(G.nf({4, 4, 3, 3}) == SurfWord{4, 4, 3, 3});
  CHECK(G.nf({2, -1, 2, -1}) == SurfWord{2, -1, 2, -1});
  CHECK(G.nf({-4, -3, -2, -1}) == SurfWord{-1, -2, -3, -4});
  CHECK(G.nf(surf_relator(2)) == SurfWord{});
}

TEST_CASE("normal form respects the relator") {
  std::mt19937 rng(7);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int it = 0; it < 60; ++it) {
      SurfWord w = random_word(rng, g, 8);
      SurfWord padded =
          fw_concat(w, random_null_word(rng, G, 1, 2));
      CHECK(G.nf(w) == G.nf(padded));
    }
  }
}

TEST_CASE("normal forms are prefix closed") {
  std::mt19937 rng(11);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int it = 0; it < 40; ++it) {
      SurfWord n = G.nf(random_word(rng, g, 7));
      for (std::size_t k = 0; k <= n.size(); ++k) {
        SurfWord pre(n.begin(), n.begin() + k);
        CHECK(G.nf(pre) == pre);
      }
    }
  }
}

TEST_CASE("multiplication is a group operation on normal forms") {
  std::mt19937 rng(13);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int it = 0; it < 30; ++it) {
      SurfWord a = random_word(rng, g, 5);
      SurfWord b = random_word(rng, g, 5);
      SurfWord c = random_word(rng, g, 5);
      CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      CHECK(G.mul(a, G.inv(a)) == SurfWord{});
    }
  }
}

TEST_CASE("tree edges are direction symmetric") {
  std::mt19937 rng(17);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int it = 0; it < 40; ++it) {
      SurfWord gamma = G.nf(random_word(rng, g, 5));
      for (int l = -2 * g; l <= 2 * g; ++l) {
        if (l == 0) continue;
        SurfWord ext = gamma;
        ext.push_back(l);
        SurfWord target = G.nf(ext);
        CHECK(G.is_tree_edge(gamma, l) == G.is_tree_edge(target, -l));
      }
    }
  }
}

TEST_CASE("torus rectangle fills with two faces") {
  SurfaceGroup G(1);
  Fuel fuel;
  auto faces = G.fill_null_word({1, 1, 2, -1, -1, -2}, fuel);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0] == FaceFactor{{1}, +1});
  CHECK(faces[1] == FaceFactor{{}, +1});
  CHECK(fw_reduce(G.expand_faces(faces)) ==
        SurfWord{1, 1, 2, -1, -1, -2});
}

TEST_CASE("genus 2 pinned fills") {
  SurfaceGroup G(2);
  Fuel fuel;
  auto f1 = G.fill_null_word(surf_relator(2), fuel);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == FaceFactor{{}, +1});

  auto f2 = G.fill_null_word({2, 3, 4, -1, -2, -3, -4, 1}, fuel);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == FaceFactor{{-1}, +1});
}

TEST_CASE("fillings expand back to the input word") {
  std::mt19937 rng(19);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    int iters = g == 1 ? 120 : 60;
    for (int it = 0; it < iters; ++it) {
      SurfWord w = random_null_word(rng, G, 1 + it % 2, g == 1 ? 4 : 2);
      Fuel fuel;
      auto faces = G.fill_null_word(w, fuel);
      CHECK(fw_reduce(G.expand_faces(faces)) == fw_reduce(w));
    }
  }
}

TEST_CASE("filling rejects nontrivial words") {
  SurfaceGroup G(1);
  Fuel fuel;
  CHECK_THROWS_AS(G.fill_null_word({1}, fuel), pipeline_error);
}

TEST_CASE("surface word text round trip") {
  CHECK(format_surf_word({}) == "");
  CHECK(format_surf_word({1, -2}) == "w1 w2^-1");
  CHECK(parse_surf_word("w1 w2^-1", 1) == SurfWord{1, -2});
  CHECK(parse_surf_word("", 2) == SurfWord{});
  CHECK(parse_surf_word("w4", 2) == SurfWord{4});
  CHECK_THROWS_AS(parse_surf_word("w3", 1), parse_error);
  CHECK_THROWS_AS(parse_surf_word("v1", 1), parse_error);
  CHECK_THROWS_AS(parse_surf_word("w1^2", 1), parse_error);
}

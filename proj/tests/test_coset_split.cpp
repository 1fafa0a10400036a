#include "vassiliev/coset_split.hpp"

#include <random>

#include "doctest.h"

using namespace vb;

namespace {

SurfWord random_surf(std::mt19937& rng, const SurfaceGroup& G, int len) {
  std::uniform_int_distribution<int> letter(1, 2 * G.genus());
  std::uniform_int_distribution<int> sgn(0, 1);
  SurfWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(letter(rng) * (sgn(rng) ? 1 : -1));
  return G.nf(w);
}

HElem random_h(std::mt19937& rng, const SurfaceGroup& G, int n) {
  HElem h;
  std::uniform_int_distribution<int> len(0, 3);
  for (int i = 0; i < n; ++i) h.loops.push_back(random_surf(rng, G, len(rng)));
  h.perm = perm_id(n);
  std::shuffle(h.perm.begin(), h.perm.end(), rng);
  return h;
}

BWord random_braid(std::mt19937& rng, int n, int g, int len) {
  std::uniform_int_distribution<int> kind(0, n >= 2 ? 2 : 0);
  std::uniform_int_distribution<int> strand(1, n);
  std::uniform_int_distribution<int> wall(1, 2 * g);
  std::uniform_int_distribution<int> sgn(0, 1);
  BWord w;
  for (int c = 0; c < len; ++c) {
    int e = sgn(rng) ? 1 : -1;
    switch (kind(rng)) {
      case 0:
        w.push_back(La(strand(rng), wall(rng), e));
        break;
      case 1: {
        std::uniform_int_distribution<int> pos(1, n - 1);
        w.push_back(Ls(pos(rng), e));
        break;
      }
      default: {
        std::uniform_int_distribution<int> lo(1, n - 1);
        int i = lo(rng);
        std::uniform_int_distribution<int> hi(i + 1, n);
        w.push_back(Lt(i, hi(rng), e));
        break;
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("split group laws") {
  std::mt19937 rng(31);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int n : {2, 3}) {
      for (int it = 0; it < 40; ++it) {
        HElem a = random_h(rng, G, n);
        HElem b = random_h(rng, G, n);
        HElem c = random_h(rng, G, n);
        CHECK(h_mul(G, h_mul(G, a, b), c) == h_mul(G, a, h_mul(G, b, c)));
        CHECK(h_mul(G, a, h_id(n)) == a);
        CHECK(h_mul(G, h_id(n), a) == a);
        CHECK(h_mul(G, a, h_inv(G, a)) == h_id(n));
        CHECK(h_mul(G, h_inv(G, a), a) == h_id(n));
      }
    }
  }
}

TEST_CASE("split multiplication twists loops by the permutation") {
  SurfaceGroup G(1);
  HElem h1{{{1}, {}}, {2, 1}};
  HElem h2{{{2}, {}}, {1, 2}};
  HElem prod = h_mul(G, h1, h2);
  CHECK(prod.loops == std::vector<SurfWord>{{1}, {2}});
  CHECK(prod.perm == Perm{2, 1});
  HElem prod2 = h_mul(G, h2, h1);
  CHECK(prod2.loops == std::vector<SurfWord>{{1, 2}, {}});
  CHECK(prod2.perm == Perm{2, 1});
}

TEST_CASE("projection of letters") {
  SurfaceGroup G(1);
  HElem hs = phi(G, {Ls(1, 1)}, 2);
  CHECK(hs.loops == std::vector<SurfWord>{{}, {}});
  CHECK(hs.perm == Perm{2, 1});

  HElem ha = phi(G, {La(2, 1, -1)}, 2);
  CHECK(ha.loops == std::vector<SurfWord>{{}, {-1}});
  CHECK(ha.perm == Perm{1, 2});

  CHECK(phi(G, {Lt(1, 2, 1)}, 2) == h_id(2));
  CHECK(phi(G, {LT(1, 3, -1)}, 3) == h_id(3));
  CHECK(phi(G, {Ltau(1)}, 2).perm == Perm{2, 1});

  // conjugated twists project away entirely
  CHECK(phi(G, {La(1, 1, 1), Lt(1, 2, 1), La(1, 1, -1)}, 2) == h_id(2));
}

TEST_CASE("projection is a homomorphism") {
  std::mt19937 rng(37);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int n : {2, 3}) {
      for (int it = 0; it < 30; ++it) {
        BWord u = random_braid(rng, n, g, 4);
        BWord v = random_braid(rng, n, g, 4);
        BWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(phi(G, uv, n) == h_mul(G, phi(G, u, n), phi(G, v, n)));
      }
    }
  }
}

TEST_CASE("section lifts back to the same projection") {
  std::mt19937 rng(41);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int n : {2, 3, 4}) {
      for (int it = 0; it < 30; ++it) {
        HElem h = random_h(rng, G, n);
        CHECK(phi(G, section(h), n) == h);
      }
    }
  }
}

TEST_CASE("transliteration spells loops on one strand") {
  CHECK(transliterate({1, -2}, 3) == BWord{La(3, 1, 1), La(3, 2, -1)});
  CHECK(transliterate({}, 1) == BWord{});
}

TEST_CASE("pure part pinned values") {
  SurfaceGroup G(1);
  CHECK(k_part(G, {Ls(1, 1)}, 2) == BWord{});
  CHECK(k_part(G, {La(1, 1, 1)}, 2) == BWord{});
  CHECK(k_part(G, {Ls(1, -1)}, 2) == BWord{Ls(1, -1), Ls(1, -1)});
}

TEST_CASE("pure part always projects to the identity") {
  std::mt19937 rng(43);
  for (int g : {1, 2}) {
    SurfaceGroup G(g);
    for (int n : {2, 3}) {
      for (int it = 0; it < 40; ++it) {
        BWord w = random_braid(rng, n, g, 6);
        CHECK(phi(G, k_part(G, w, n), n) == h_id(n));
      }
    }
  }
}

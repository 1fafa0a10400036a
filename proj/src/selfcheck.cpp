#include "vassiliev/selfcheck.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <vector>

#include "vassiliev/braid_words.hpp"
#include "vassiliev/combing.hpp"
#include "vassiliev/coset_split.hpp"
#include "vassiliev/diagram_algebra.hpp"
#include "vassiliev/errors.hpp"
#include "vassiliev/relation_table.hpp"
#include "vassiliev/surface_group.hpp"

namespace vb {
namespace {

using Rng = std::mt19937;

int rnd_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

BWord rnd_sigma_word(Rng& rng, int n, int len) {
  BWord w;
  for (int k = 0; k < len; ++k)
    w.push_back(Ls(rnd_int(rng, 1, n - 1), rnd_int(rng, 0, 1) ? 1 : -1));
  return w;
}

BWord rnd_mixed_word(Rng& rng, int n, int g, int len) {
  BWord w;
  for (int k = 0; k < len; ++k) {
    int e = rnd_int(rng, 0, 1) ? 1 : -1;
    if (n >= 2 && rnd_int(rng, 0, 1))
      w.push_back(Ls(rnd_int(rng, 1, n - 1), e));
    else
      w.push_back(La(rnd_int(rng, 1, n), rnd_int(rng, 1, 2 * g), e));
  }
  return w;
}

// Rewrites a crossing-only word without changing the braid it spells.
BWord apply_braid_move(Rng& rng, const BWord& w, int n) {
  int kind = rnd_int(rng, 0, 2);
  if (kind == 1) {
    std::vector<int> spots;
    for (size_t p = 0; p + 2 < w.size(); ++p) {
      const auto &x = w[p], &y = w[p + 1], &z = w[p + 2];
      if (x.e == y.e && y.e == z.e && x.i == z.i &&
          (y.i == x.i + 1 || y.i == x.i - 1))
        spots.push_back(static_cast<int>(p));
    }
    if (!spots.empty()) {
      int p = spots[rnd_int(rng, 0, static_cast<int>(spots.size()) - 1)];
      BWord v = w;
      std::swap(v[p], v[p + 1]);
      v[p + 2] = v[p];
      return v;
    }
  } else if (kind == 2) {
    std::vector<int> spots;
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (std::abs(w[p].i - w[p + 1].i) >= 2)
        spots.push_back(static_cast<int>(p));
    if (!spots.empty()) {
      int p = spots[rnd_int(rng, 0, static_cast<int>(spots.size()) - 1)];
      BWord v = w;
      std::swap(v[p], v[p + 1]);
      return v;
    }
  }
  BWord v = w;
  int p = rnd_int(rng, 0, static_cast<int>(v.size()));
  int j = rnd_int(rng, 1, n - 1);
  int e = rnd_int(rng, 0, 1) ? 1 : -1;
  v.insert(v.begin() + p, {Ls(j, e), Ls(j, -e)});
  return v;
}

SurfWord rnd_null_surf_word(Rng& rng, const SurfaceGroup& G) {
  SurfWord out;
  int pieces = rnd_int(rng, 1, 2);
  for (int k = 0; k < pieces; ++k) {
    SurfWord pre;
    int plen = rnd_int(rng, 0, 3);
    for (int t = 0; t < plen; ++t) {
      int r = rnd_int(rng, 1, 2 * G.genus());
      pre.push_back(rnd_int(rng, 0, 1) ? r : -r);
    }
    SurfWord rel = G.rel();
    if (rnd_int(rng, 0, 1)) rel = fw_inv(rel);
    out = fw_concat(out, fw_concat(pre, fw_concat(rel, fw_inv(pre))));
  }
  return fw_reduce(out);
}

struct Suite {
  const char* name;
  int passed = 0;
  int total = 0;
  void tally(bool ok) {
    ++total;
    if (ok) ++passed;
  }
};

void report(std::ostream& out, const Suite& s) {
  out << std::left << std::setw(18) << s.name << " " << s.passed << "/"
      << s.total << (s.passed == s.total ? " ok" : " FAILED") << "\n";
}

}  // namespace

bool run_selfcheck(const SelfcheckOptions& opt, std::ostream& out) {
  Rng rng(opt.seed);
  SurfaceGroup G(opt.g);
  std::vector<Suite> suites;

  {
    Suite s{"relation table"};
    auto table = relation_table(opt.n, opt.g);
    if (opt.corrupt_rule && !table.empty())
      table.front().lhs.push_back(Ls(1, 1));
    for (const auto& entry : table) {
      Fuel fuel{opt.fuel};
      bool ok = false;
      try {
        ok = u_of(G, opt.n, entry.lhs, opt.N, fuel) ==
             u_of(G, opt.n, entry.rhs, opt.N, fuel);
      } catch (const pipeline_error&) {
      }
      s.tally(ok);
    }
    suites.push_back(s);
  }

  {
    Suite s{"crossing oracle"};
    for (int trial = 0; trial < 30 && opt.n >= 2; ++trial) {
      BWord w1 = rnd_sigma_word(rng, opt.n, rnd_int(rng, 2, 7));
      BWord w2 = w1;
      for (int m = 0; m < 4; ++m) w2 = apply_braid_move(rng, w2, opt.n);
      Fuel fuel{opt.fuel};
      bool ok = false;
      try {
        ok = artin_eq(w1, w2, opt.n) &&
             u_of(G, opt.n, w1, opt.N, fuel) ==
                 u_of(G, opt.n, w2, opt.N, fuel);
      } catch (const pipeline_error&) {
      }
      s.tally(ok);
    }
    suites.push_back(s);
  }

  {
    Suite s{"inverse words"};
    for (int trial = 0; trial < 25; ++trial) {
      BWord w = rnd_mixed_word(rng, opt.n, opt.g, rnd_int(rng, 1, 6));
      BWord ww = w;
      BWord wi = inv_word(w);
      ww.insert(ww.end(), wi.begin(), wi.end());
      Fuel fuel{opt.fuel};
      bool ok = false;
      try {
        ok = u_of(G, opt.n, ww, opt.N, fuel) == u_one(opt.n);
      } catch (const pipeline_error&) {
      }
      s.tally(ok);
    }
    suites.push_back(s);
  }

  {
    Suite s{"series inverse"};
    int top = std::max(opt.n, 2);
    for (int trial = 0; trial < 40; ++trial) {
      FWord v;
      int len = rnd_int(rng, 0, 5);
      for (int k = 0; k < len; ++k) {
        int i = rnd_int(rng, 1, top - 1);
        int j = rnd_int(rng, i + 1, top);
        SurfWord label;
        if (rnd_int(rng, 0, 1)) label.push_back(rnd_int(rng, 1, 2 * opt.g));
        v.push_back({i, j, G.nf(label), rnd_int(rng, 0, 1) ? 1 : -1});
      }
      FWord vi(v.rbegin(), v.rend());
      for (auto& fl : vi) fl.e = -fl.e;
      AElem prod = a_mul(G, magnus_v(G, v, opt.N), magnus_v(G, vi, opt.N),
                         opt.N);
      s.tally(prod == a_one());
    }
    suites.push_back(s);
  }

  {
    Suite s{"face filling"};
    for (int trial = 0; trial < 40; ++trial) {
      SurfWord w = rnd_null_surf_word(rng, G);
      Fuel fuel{opt.fuel};
      bool ok = false;
      try {
        FreeWord back;
        for (const auto& f : G.fill_null_word(w, fuel))
          back = fw_concat(back, G.expand_faces({f}));
        ok = fw_reduce(fw_concat(fw_inv(back), w)).empty();
      } catch (const pipeline_error&) {
      }
      s.tally(ok);
    }
    suites.push_back(s);
  }

  bool all_ok = true;
  for (const auto& s : suites) {
    report(out, s);
    all_ok = all_ok && s.passed == s.total;
  }
  out << (all_ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return all_ok;
}

}  // namespace vb

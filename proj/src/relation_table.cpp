#include "vassiliev/relation_table.hpp"

namespace vb {

namespace {

void append(BWord& out, const BWord& piece) {
  out.insert(out.end(), piece.begin(), piece.end());
}

BLetter b_letter(int l, int m, int e = 1) {
  return La(l, m, (m % 2 == 1 ? 1 : -1) * e);
}

void sigma_a_entries(std::vector<RelationEntry>& out, int n, int g) {
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int r = 1; r <= 2 * g; ++r) {
        BWord lhs{Ls(k, 1), La(i, r, 1), Ls(k, -1)};
        BWord rhs;
        if (k == i) {
          rhs = r % 2 == 0 ? BWord{La(i + 1, r, 1), Lt(i, i + 1, -1)}
                           : BWord{Lt(i, i + 1, 1), La(i + 1, r, 1)};
        } else if (k == i - 1) {
          rhs = r % 2 == 0 ? BWord{Lt(i - 1, i, 1), La(i - 1, r, 1)}
                           : BWord{La(i - 1, r, 1), Lt(i - 1, i, -1)};
        } else {
          rhs = {La(i, r, 1)};
        }
        out.push_back({"sa k=" + std::to_string(k) + " i=" + std::to_string(i) +
                           " r=" + std::to_string(r),
                       lhs, rhs});
      }
}

void sigma_t_entries(std::vector<RelationEntry>& out, int n, int /*g*/) {
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        BWord lhs{Ls(k, 1), Lt(i, j, 1), Ls(k, -1)};
        BWord rhs;
        if (j == i + 1 && k == i)
          rhs = {Lt(i, j, 1)};
        else if (k == i - 1)
          rhs = {Lt(i - 1, j, 1)};
        else if (k == i)
          rhs = {Lt(i, i + 1, 1), Lt(i + 1, j, 1), Lt(i, i + 1, -1)};
        else if (k == j - 1)
          rhs = {Lt(i, j - 1, 1)};
        else if (k == j)
          rhs = {Lt(i, j, -1), Lt(i, j + 1, 1), Lt(i, j, 1)};
        else
          rhs = {Lt(i, j, 1)};
        out.push_back({"st k=" + std::to_string(k) + " i=" + std::to_string(i) +
                           " j=" + std::to_string(j),
                       lhs, rhs});
      }
}

void TT_entries(std::vector<RelationEntry>& out, int n, int g) {
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int r = 1; r <= 2 * g; ++r)
        out.push_back({"Ta i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " r=" + std::to_string(r),
                       {LT(i, j, 1), La(1, r, 1), LT(i, j, -1)},
                       {La(1, r, 1)}});
      for (int k = 2; k <= n; ++k) {
        BWord lhs{LT(i, j, 1), LT(1, k, 1), LT(i, j, -1)};
        BWord rhs;
        if (k < i || k >= j) {
          rhs = {LT(1, k, 1)};
        } else {
          if (i - 1 >= 2) rhs.push_back(LT(1, i - 1, 1));
          append(rhs, {LT(1, i, -1), LT(1, k, 1), LT(1, j, -1), LT(1, i, 1)});
          if (i - 1 >= 2) rhs.push_back(LT(1, i - 1, -1));
          rhs.push_back(LT(1, j, 1));
        }
        out.push_back({"TT i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(k),
                       lhs, rhs});
      }
    }
}

void lemar1_entries(std::vector<RelationEntry>& out, int n, int g) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      BWord P;
      for (int m = j - 1; m > i; --m) P.push_back(Lt(i, m, 1));
      BWord Pi = inv_word(P);
      for (int r = 1; r <= 2 * g; ++r) {
        BWord A{La(i, r, 1)};
        BWord Ai = inv_word(A);
        BWord t{Lt(i, j, 1)};
        BWord odd_form, even_form, odd_flip, even_flip;
        odd_form = P;  append(odd_form, Ai);  append(odd_form, t);
        append(odd_form, A);  append(odd_form, Pi);
        even_form = Ai;  append(even_form, Pi);  append(even_form, t);
        append(even_form, P);  append(even_form, A);
        odd_flip = P;  append(odd_flip, A);  append(odd_flip, t);
        append(odd_flip, Ai);  append(odd_flip, Pi);
        even_flip = A;  append(even_flip, Pi);  append(even_flip, t);
        append(even_flip, P);  append(even_flip, Ai);
        const BWord& rhs_pos = r % 2 == 1 ? odd_form : even_form;
        const BWord& rhs_neg = r % 2 == 1 ? even_flip : odd_flip;
        std::string suffix = " i=" + std::to_string(i) +
                             " j=" + std::to_string(j) +
                             " r=" + std::to_string(r);
        out.push_back({"r1+" + suffix,
                       {La(j, r, 1), Lt(i, j, 1), La(j, r, -1)}, rhs_pos});
        out.push_back({"r1-" + suffix,
                       {La(j, r, -1), Lt(i, j, 1), La(j, r, 1)}, rhs_neg});
      }
    }
}

void between_entries(std::vector<RelationEntry>& out, int n, int g) {
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i) {
        if (i == j || i == k) continue;
        for (int r = 1; r <= 2 * g; ++r)
          for (int e : {1, -1}) {
            BWord lhs{La(i, r, e), Lt(j, k, 1), La(i, r, -e)};
            BWord rhs;
            if (i < j || i > k) {
              rhs = {Lt(j, k, 1)};
            } else {
              BWord Q;
              for (int m = j + 1; m < i; ++m) Q.push_back(Lt(j, m, -1));
              for (int m = i; m > j; --m) Q.push_back(Lt(j, m, 1));
              bool conj_is_twist = (e == 1) == (r % 2 == 1);
              if (conj_is_twist) {
                rhs = {Lt(j, i, -1), Lt(j, k, 1), Lt(j, i, 1)};
              } else {
                // the conjugator acts through a loop around strand j; its
                // outer sign pairs off with the twist case above
                BWord alpha{La(j, r, -e)};
                append(alpha, Q);
                alpha.push_back(La(j, r, e));
                rhs = alpha;
                rhs.push_back(Lt(j, k, 1));
                append(rhs, inv_word(alpha));
              }
            }
            out.push_back({"p2 i=" + std::to_string(i) + " jk=(" +
                               std::to_string(j) + "," + std::to_string(k) +
                               ") r=" + std::to_string(r) +
                               " e=" + std::to_string(e),
                           lhs, rhs});
          }
      }
}

void btable_entries(std::vector<RelationEntry>& out, int n, int g) {
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      for (int r = 1; r <= 2 * g; ++r)
        for (int s = 1; s <= 2 * g; ++s) {
          BWord bk{b_letter(k, r)};
          BWord bki = inv_word(bk);
          BWord bi{b_letter(i, s)};
          BWord lhs = bk;
          append(lhs, bi);
          append(lhs, bki);
          BWord rhs;
          if (s == r) {
            rhs = bi;
          } else if (i < k) {
            if (s < r) {
              rhs = {Lt(i, k, -1)};
              append(rhs, bi);
            } else {
              rhs = bi;
              append(rhs, inv_word(BWord{b_letter(i, r)}));
              rhs.push_back(Lt(i, k, 1));
              rhs.push_back(b_letter(i, r));
            }
          } else {
            if (s < r) {
              rhs = bi;
              append(rhs, inv_word(BWord{b_letter(i, r)}));
              rhs.push_back(Lt(k, i, -1));
              rhs.push_back(b_letter(i, r));
            } else {
              rhs = {Lt(k, i, 1)};
              append(rhs, bi);
            }
          }
          out.push_back({"b k=" + std::to_string(k) + " i=" +
                             std::to_string(i) + " r=" + std::to_string(r) +
                             " s=" + std::to_string(s),
                         lhs, rhs});
        }
    }
}

}  // namespace

std::vector<RelationEntry> relation_table(int n, int g) {
  std::vector<RelationEntry> out;
  sigma_a_entries(out, n, g);
  sigma_t_entries(out, n, g);
  TT_entries(out, n, g);
  lemar1_entries(out, n, g);
  between_entries(out, n, g);
  btable_entries(out, n, g);
  return out;
}

BWord strand_delete(const BWord& w, int strand) {
  int p = strand;
  BWord out;
  for (const BLetter& l : w) {
    if (l.k == BKind::Sigma || l.k == BKind::Tau) {
      int j = l.i;
      if (j == p) {
        p = j + 1;
      } else if (j + 1 == p) {
        p = j;
      } else {
        BLetter m = l;
        m.i = j - (j > p ? 1 : 0);
        out.push_back(m);
      }
    } else if (l.k == BKind::A) {
      if (l.i != p) {
        BLetter m = l;
        m.i = l.i - (l.i > p ? 1 : 0);
        out.push_back(m);
      }
    } else {
      if (p != l.i && p != l.j) {
        BLetter m = l;
        m.i = l.i - (l.i > p ? 1 : 0);
        m.j = l.j - (l.j > p ? 1 : 0);
        out.push_back(m);
      }
    }
  }
  return out;
}

}  // namespace vb

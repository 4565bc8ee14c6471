#include "gsp6/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gsp6::weights {

DominantWeight DominantWeight::c2(int m1, int m2) {
  if (m1 < m2 || m2 < 0) throw std::invalid_argument("not a dominant C2 weight");
  return DominantWeight{Series::C2, {m1, m2, 0}};
}

DominantWeight DominantWeight::c3(int l1, int l2, int l3) {
  if (l1 < l2 || l2 < l3 || l3 < 0) throw std::invalid_argument("not a dominant C3 weight");
  return DominantWeight{Series::C3, {l1, l2, l3}};
}

int DominantWeight::total() const { return e[0] + e[1] + e[2]; }

bool DominantWeight::operator<(const DominantWeight& o) const {
  if (series != o.series) return series < o.series;
  return e < o.e;
}

long long FormalCharacter::total() const {
  long long t = 0;
  for (auto& [w, c] : terms) t += c;
  return t;
}

long long FormalCharacter::mult(const Exp& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

void FormalCharacter::add(const Exp& w, long long c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) { terms.emplace(w, c); return; }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

bool FormalCharacter::weyl_invariant() const {
  // signed permutations acting on the first `rank` coordinates
  std::array<int, 3> idx{0, 1, 2};
  for (auto& [w, c] : terms) {
    std::array<int, 3> perm = idx;
    std::sort(perm.begin(), perm.begin() + rank);
    do {
      for (int signs = 0; signs < (1 << rank); ++signs) {
        Exp img{0, 0, 0};
        for (int i = 0; i < rank; ++i)
          img[i] = ((signs >> i) & 1 ? -1 : 1) * w[perm[i]];
        if (mult(img) != c) return false;
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + rank));
  }
  return true;
}

long long closed_form_dimension(const DominantWeight& w) {
  if (w.series == Series::C2) {
    long long a = w.e[0] - w.e[1], b = w.e[1];
    long long num = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3);
    if (num % 6 != 0) throw std::logic_error("C2 dimension polynomial not divisible by 6");
    return num / 6;
  }
  long long a = w.e[0] - w.e[1], b = w.e[1] - w.e[2], c = w.e[2];
  long long num = 1;
  for (long long f : {a + 1, a + 2 * (b + c) + 5, a + b + 2, a + b + 2 * c + 4,
                      b + 1, b + 2 * c + 3, a + b + c + 3, b + c + 2, c + 1})
    num *= f;
  if (num % 720 != 0) throw std::logic_error("C3 dimension polynomial not divisible by 720");
  return num / 720;
}

namespace {

// positive roots in exponent coordinates, and rho
struct RootData {
  std::vector<Exp> pos;
  Exp rho;
  int rank;
};

RootData roots_for(Series s) {
  RootData rd;
  rd.rank = (s == Series::C2) ? 2 : 3;
  int n = rd.rank;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Exp a{0, 0, 0}; a[i] = 1; a[j] = -1; rd.pos.push_back(a);
      Exp b{0, 0, 0}; b[i] = 1; b[j] = 1; rd.pos.push_back(b);
    }
  for (int i = 0; i < n; ++i) {
    Exp a{0, 0, 0}; a[i] = 2; rd.pos.push_back(a);
  }
  rd.rho = (n == 2) ? Exp{2, 1, 0} : Exp{3, 2, 1};
  return rd;
}

long long dot(const Exp& a, const Exp& b) {
  return (long long)a[0] * b[0] + (long long)a[1] * b[1] + (long long)a[2] * b[2];
}

}  // namespace

long long weyl_dimension(const DominantWeight& w) {
  RootData rd = roots_for(w.series);
  Exp lr{w.e[0] + rd.rho[0], w.e[1] + rd.rho[1], w.e[2] + rd.rho[2]};
  __int128 num = 1, den = 1;
  for (auto& a : rd.pos) {
    num *= dot(lr, a);
    den *= dot(rd.rho, a);
  }
  if (den == 0 || num % den != 0) throw std::logic_error("Weyl dimension not integral");
  return (long long)(num / den);
}

namespace {

// Alternant sum_{w in Weyl} sign(w) e^{w(mu)} for strictly dominant mu.
FormalCharacter alternant(const Exp& mu, int rank) {
  FormalCharacter A;
  A.rank = rank;
  std::array<int, 3> perm{0, 1, 2};
  std::vector<int> base(rank);
  std::iota(base.begin(), base.end(), 0);
  std::sort(base.begin(), base.end());
  do {
    // permutation sign
    int inv = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (base[i] > base[j]) ++inv;
    for (int signs = 0; signs < (1 << rank); ++signs) {
      int sgn = (inv % 2 ? -1 : 1);
      Exp img{0, 0, 0};
      for (int i = 0; i < rank; ++i) {
        int s = (signs >> i) & 1;
        img[i] = (s ? -1 : 1) * mu[base[i]];
        if (s) sgn = -sgn;
      }
      A.add(img, sgn);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  (void)perm;
  return A;
}

// lexicographic comparison of exponent vectors
bool lex_less(const Exp& a, const Exp& b) { return a < b; }

}  // namespace

FormalCharacter character(const DominantWeight& w) {
  RootData rd = roots_for(w.series);
  Exp lr{w.e[0] + rd.rho[0], w.e[1] + rd.rho[1], w.e[2] + rd.rho[2]};
  FormalCharacter num = alternant(lr, rd.rank);
  FormalCharacter den = alternant(rd.rho, rd.rank);

  // exact polynomial division, eliminating the lex-max term each step;
  // den's lex-max term is rho with coefficient +1
  Exp denTop = rd.rho;
  FormalCharacter q;
  q.rank = rd.rank;
  while (!num.terms.empty()) {
    auto it = std::prev(num.terms.end());  // std::map is lex-ordered
    Exp t = it->first;
    long long c = it->second;
    Exp qe{t[0] - denTop[0], t[1] - denTop[1], t[2] - denTop[2]};
    q.add(qe, c);
    for (auto& [de, dc] : den.terms)
      num.add({qe[0] + de[0], qe[1] + de[1], qe[2] + de[2]}, -c * dc);
  }
  (void)lex_less;
  return q;
}

namespace {

struct ExpLess {
  bool operator()(const Exp& a, const Exp& b) const { return a < b; }
};

// Freudenthal recursion with memoization over one highest weight.
struct Freudenthal {
  RootData rd;
  Exp lam;
  std::map<Exp, long long, ExpLess> memo;

  long long c2(const Exp& v) const {  // <v, v + 2 rho>
    Exp v2r{v[0] + 2 * rd.rho[0], v[1] + 2 * rd.rho[1], v[2] + 2 * rd.rho[2]};
    return dot(v, v2r);
  }

  // dominant representative under the signed-permutation Weyl group
  Exp dominant(const Exp& v) const {
    Exp d{std::abs(v[0]), std::abs(v[1]), std::abs(v[2])};
    std::sort(d.begin(), d.begin() + rd.rank, std::greater<int>());
    return d;
  }

  bool in_root_lattice_cone(const Exp& v) const {
    // lam - v must be a non-negative combination reachable by positive roots;
    // quick necessary checks: partial sums and parity
    int diff0 = lam[0] - v[0];
    int diff1 = diff0 + lam[1] - v[1];
    int diff2 = diff1 + (rd.rank == 3 ? lam[2] - v[2] : 0);
    if (diff0 < 0 || diff1 < 0 || diff2 < 0) return false;
    if (diff2 % 2 != 0) return false;  // C-type root lattice: even total
    return true;
  }

  long long mult(const Exp& v0) {
    Exp v = dominant(v0);
    if (v == lam) return 1;
    if (!in_root_lattice_cone(v)) return 0;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    memo.emplace(v, 0);  // guard against cycles (none occur: height decreases)
    __int128 rhs = 0;
    for (auto& a : rd.pos) {
      for (int k = 1;; ++k) {
        Exp u{v[0] + k * a[0], v[1] + k * a[1], v[2] + k * a[2]};
        if (!in_root_lattice_cone(dominant(u))) break;
        long long mu = mult(u);
        if (mu == 0) {
          // multiplicities can vanish inside the hull only off the lattice;
          // since in_root_lattice_cone holds, continue while heights allow
          // but stop once u escapes the weight polytope for good
          bool escaped = true;
          for (int i = 0; i < rd.rank; ++i)
            if (std::abs(u[i]) <= lam[0] + lam[1] + lam[2]) { escaped = false; break; }
          if (escaped) break;
          continue;
        }
        rhs += (__int128)mu * dot(u, a);
      }
    }
    long long denom = c2(lam) - c2(v);
    if (denom <= 0) throw std::logic_error("Freudenthal: non-positive denominator");
    __int128 r2 = 2 * rhs;
    if (r2 % denom != 0) throw std::logic_error("Freudenthal: non-exact division");
    long long m = (long long)(r2 / denom);
    memo[v] = m;
    return m;
  }
};

}  // namespace

long long weight_multiplicity(const DominantWeight& w, const Exp& target) {
  Freudenthal f{roots_for(w.series), {w.e[0], w.e[1], w.e[2]}, {}};
  return f.mult(target);
}

std::vector<DominantWeight> weights_up_to(Series s, int bound) {
  std::vector<DominantWeight> out;
  if (s == Series::C2) {
    for (int m1 = 0; m1 <= bound; ++m1)
      for (int m2 = 0; m2 <= m1 && m1 + m2 <= bound; ++m2)
        out.push_back(DominantWeight::c2(m1, m2));
  } else {
    for (int l1 = 0; l1 <= bound; ++l1)
      for (int l2 = 0; l2 <= l1; ++l2)
        for (int l3 = 0; l3 <= l2; ++l3)
          if (l1 + l2 + l3 <= bound) out.push_back(DominantWeight::c3(l1, l2, l3));
  }
  return out;
}

std::vector<DominantWeight> c3_with_first_entry_up_to(int cap) {
  std::vector<DominantWeight> out;
  for (int l1 = 0; l1 <= cap; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2)
      for (int l3 = 0; l3 <= l2; ++l3)
        out.push_back(DominantWeight::c3(l1, l2, l3));
  return out;
}

}  // namespace gsp6::weights

// Exact arithmetic helpers: integers, residues mod p^N, and 6x6 matrices
// over either ring. Modulus 0 means plain (unbounded within int64) integers.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gsp6 {

using i64 = std::int64_t;

// p^e as int64; caller guarantees no overflow (checked).
inline i64 ipow(i64 p, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (int64_t(1) << 62) / p) throw std::overflow_error("ipow overflow");
    r *= p;
  }
  return r;
}

// Residue ring Z/p^N, or Z when modulus == 0.
struct Ring {
  i64 p = 0;
  int N = 0;
  i64 modulus = 0;  // p^N, or 0 for exact integers

  Ring() = default;
  Ring(i64 p_, int N_) : p(p_), N(N_), modulus(ipow(p_, N_)) {}
  static Ring integers() { return Ring(); }
  bool exact() const { return modulus == 0; }

  i64 reduce(i64 x) const {
    if (modulus == 0) return x;
    i64 r = x % modulus;
    return r < 0 ? r + modulus : r;
  }
  i64 add(i64 a, i64 b) const { return reduce(a + b); }
  i64 sub(i64 a, i64 b) const { return reduce(a - b); }
  i64 mul(i64 a, i64 b) const {
    if (modulus == 0) return a * b;
    return reduce((__int128)a * b % modulus);
  }
  i64 neg(i64 a) const { return reduce(-a); }

  // p-adic valuation, capped at N for residues (val(0) = N).
  int val(i64 x) const {
    if (modulus == 0) throw std::logic_error("val needs a finite ring");
    x = reduce(x);
    if (x == 0) return N;
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
  }
  bool divisible(i64 x, int e) const { return e <= 0 || val(x) >= e; }

  // Inverse of a unit (x coprime to p); nullopt otherwise.
  std::optional<i64> inv(i64 x) const {
    if (modulus == 0) {
      if (x == 1) return 1;
      if (x == -1) return -1;
      return std::nullopt;
    }
    x = reduce(x);
    if (x % p == 0) return std::nullopt;
    // extended Euclid mod p^N
    i64 a = x, m = modulus, u = 1, v = 0;
    while (a != 0) {
      i64 q = m / a;
      m -= q * a; std::swap(a, m);
      v -= q * u; std::swap(u, v);
    }
    // m == gcd == 1 here since x is a unit
    return reduce(v);
  }

  bool operator==(const Ring& o) const { return p == o.p && N == o.N; }
  bool operator!=(const Ring& o) const { return !(*this == o); }
};

// 6x6 matrix over a Ring. Row-major.
struct Mat6 {
  Ring ring;
  std::array<i64, 36> a{};

  Mat6() = default;
  explicit Mat6(Ring r) : ring(r) { a.fill(0); }

  i64& at(int i, int j) { return a[i * 6 + j]; }
  i64 at(int i, int j) const { return a[i * 6 + j]; }

  static Mat6 identity(Ring r) {
    Mat6 m(r);
    for (int i = 0; i < 6; ++i) m.at(i, i) = 1;
    return m;
  }

  Mat6 mul(const Mat6& o) const {
    if (ring != o.ring) throw std::invalid_argument("ring mismatch");
    Mat6 r(ring);
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k) {
        i64 x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < 6; ++j)
          r.at(i, j) = ring.add(r.at(i, j), ring.mul(x, o.at(k, j)));
      }
    return r;
  }

  Mat6 transpose() const {
    Mat6 r(ring);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat6& o) const { return ring == o.ring && a == o.a; }
  bool operator!=(const Mat6& o) const { return !(*this == o); }
  bool operator<(const Mat6& o) const { return a < o.a; }

  // Inverse via Gauss-Jordan; requires unit pivots (works over Z/p^N for
  // invertible matrices since non-unit columns would make det non-unit).
  std::optional<Mat6> inverse() const {
    Mat6 m = *this, inv = Mat6::identity(ring);
    for (int c = 0; c < 6; ++c) {
      int piv = -1;
      for (int r = c; r < 6; ++r)
        if (ring.inv(m.at(r, c))) { piv = r; break; }
      if (piv < 0) return std::nullopt;
      if (piv != c)
        for (int j = 0; j < 6; ++j) {
          std::swap(m.a[piv * 6 + j], m.a[c * 6 + j]);
          std::swap(inv.a[piv * 6 + j], inv.a[c * 6 + j]);
        }
      i64 ip = *ring.inv(m.at(c, c));
      for (int j = 0; j < 6; ++j) {
        m.at(c, j) = ring.mul(m.at(c, j), ip);
        inv.at(c, j) = ring.mul(inv.at(c, j), ip);
      }
      for (int r = 0; r < 6; ++r) {
        if (r == c) continue;
        i64 f = m.at(r, c);
        if (f == 0) continue;
        for (int j = 0; j < 6; ++j) {
          m.at(r, j) = ring.sub(m.at(r, j), ring.mul(f, m.at(c, j)));
          inv.at(r, j) = ring.sub(inv.at(r, j), ring.mul(f, inv.at(c, j)));
        }
      }
    }
    return inv;
  }
};

// The symplectic form J = (0 I3'; -I3' 0) with I3' the 3x3 anti-identity:
// J(0,5)=J(1,4)=J(2,3)=1, J(3,2)=J(4,1)=J(5,0)=-1.
inline Mat6 form_J(Ring r) {
  Mat6 j(r);
  j.at(0, 5) = 1; j.at(1, 4) = 1; j.at(2, 3) = 1;
  j.at(3, 2) = r.reduce(-1); j.at(4, 1) = r.reduce(-1); j.at(5, 0) = r.reduce(-1);
  return j;
}

// Deterministic xorshift-based RNG (explicit state, stable across platforms).
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return s;
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace gsp6

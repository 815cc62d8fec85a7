// Double description on pointed polyhedral cones. Rays are kept as primitive
// integer vectors; the run first tries checked 64-bit arithmetic and falls
// back to GMP integers if any intermediate product overflows.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>

#include "mixcut/errors.hpp"
#include "mixcut/hull.hpp"

namespace mixcut::poly {
namespace {

struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline int sign(std::int64_t a) { return (a > 0) - (a < 0); }
inline std::int64_t absval(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}
inline std::int64_t divexact(std::int64_t a, std::int64_t g) { return a / g; }

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline int sign(const Integer& a) { return sgn(a); }
inline Integer absval(const Integer& a) { return abs(a); }
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Integer divexact(const Integer& a, const Integer& g) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return q;
}

template <class T>
T from_integer(const Integer& v);
template <>
std::int64_t from_integer<std::int64_t>(const Integer& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
template <>
Integer from_integer<Integer>(const Integer& v) {
  return v;
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }

using Bits = std::vector<std::uint64_t>;

inline bool subset(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

inline int popcount_and(const Bits& a, const Bits& b, Bits& out) {
  int c = 0;
  for (size_t w = 0; w < a.size(); ++w) {
    out[w] = a[w] & b[w];
    c += std::popcount(out[w]);
  }
  return c;
}

template <class T>
struct Ray {
  std::vector<T> v;
  Bits zeros;
};

template <class T>
void make_primitive(std::vector<T>& v) {
  T g = 0;
  for (const auto& x : v) {
    if (sign(x) != 0) g = gcd(g, absval(x));
  }
  if (sign(g) == 0) return;
  if (g == T(1)) return;
  for (auto& x : v) x = divexact(x, g);
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    if (sign(a[k]) != 0 && sign(b[k]) != 0) s = add(s, mul(a[k], b[k]));
  }
  return s;
}

// Rows, in order, that form a basis; plus the inverse columns scaled to
// primitive integer vectors.
struct InitialBasis {
  std::vector<int> rows;
  std::vector<std::vector<Integer>> rays;
};

InitialBasis initial_basis(const std::vector<IntVector>& rows, int d) {
  InitialBasis out;
  std::vector<std::vector<Rational>> echelon;
  std::vector<int> pivots;
  for (int r = 0; r < static_cast<int>(rows.size()) &&
                  static_cast<int>(out.rows.size()) < d;
       ++r) {
    std::vector<Rational> v(d);
    for (int k = 0; k < d; ++k) v[k] = rows[r][k];
    for (size_t e = 0; e < echelon.size(); ++e) {
      const int pc = pivots[e];
      if (v[pc] != 0) {
        Rational f = v[pc] / echelon[e][pc];
        for (int k = 0; k < d; ++k) v[k] -= f * echelon[e][k];
      }
    }
    int pc = -1;
    for (int k = 0; k < d; ++k) {
      if (v[k] != 0) {
        pc = k;
        break;
      }
    }
    if (pc < 0) continue;
    echelon.push_back(v);
    pivots.push_back(pc);
    out.rows.push_back(r);
  }
  if (static_cast<int>(out.rows.size()) < d) {
    throw ValidationError("constraint rows do not span the space (cone not pointed)");
  }
  // Invert B by Gauss-Jordan on [B | I].
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(2 * d));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) M[i][k] = rows[out.rows[i]][k];
    M[i][d + i] = 1;
  }
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (M[piv][c] == 0) ++piv;
    std::swap(M[piv], M[c]);
    Rational inv = 1 / M[c][c];
    for (auto& x : M[c]) x *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == c || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (int k = 0; k < 2 * d; ++k) M[i][k] -= f * M[c][k];
    }
  }
  for (int col = 0; col < d; ++col) {
    std::vector<Rational> v(d);
    for (int i = 0; i < d; ++i) v[i] = M[i][d + col];
    out.rays.push_back(primitive(v));
  }
  return out;
}

template <class T>
std::vector<IntVector> run(const std::vector<IntVector>& int_rows, int d,
                           const HullOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const int N = static_cast<int>(int_rows.size());
  const int W = (N + 63) / 64;

  std::vector<std::vector<T>> rows(N, std::vector<T>(d));
  for (int r = 0; r < N; ++r) {
    for (int k = 0; k < d; ++k) rows[r][k] = from_integer<T>(int_rows[r][k]);
  }

  InitialBasis basis = initial_basis(int_rows, d);
  std::vector<char> processed(N, 0);
  for (int r : basis.rows) processed[r] = 1;

  std::vector<Ray<T>> rays;
  for (int c = 0; c < d; ++c) {
    Ray<T> ray;
    ray.v.resize(d);
    for (int k = 0; k < d; ++k) ray.v[k] = from_integer<T>(basis.rays[c][k]);
    ray.zeros.assign(W, 0);
    for (int i = 0; i < d; ++i) {
      if (i != c) ray.zeros[basis.rows[i] / 64] |= 1ULL << (basis.rows[i] % 64);
    }
    rays.push_back(std::move(ray));
  }

  std::int64_t steps = 0;
  Bits common(W);
  for (int r = 0; r < N; ++r) {
    if (processed[r]) continue;
    if (options.budget_seconds > 0) {
      std::chrono::duration<double> el = Clock::now() - start;
      if (el.count() > options.budget_seconds) {
        throw ResourceLimitError("double description exceeded the time budget");
      }
    }
    const std::uint64_t bit = 1ULL << (r % 64);
    const int word = r / 64;

    std::vector<T> s(rays.size());
    std::vector<int> pos, neg, zero;
    for (size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(rows[r], rays[k].v);
      const int sg = sign(s[k]);
      if (sg > 0) pos.push_back(static_cast<int>(k));
      else if (sg < 0) neg.push_back(static_cast<int>(k));
      else zero.push_back(static_cast<int>(k));
    }
    if (neg.empty()) {
      for (int k : zero) rays[k].zeros[word] |= bit;
      continue;
    }

    std::vector<Ray<T>> next;
    next.reserve(pos.size() + zero.size());
    for (int k : pos) next.push_back(rays[k]);
    for (int k : zero) {
      next.push_back(rays[k]);
      next.back().zeros[word] |= bit;
    }
    for (int a : pos) {
      if (options.budget_seconds > 0 && (steps & 0xff) == 0) {
        std::chrono::duration<double> el = Clock::now() - start;
        if (el.count() > options.budget_seconds) {
          throw ResourceLimitError("double description exceeded the time budget");
        }
      }
      for (int b : neg) {
        if (popcount_and(rays[a].zeros, rays[b].zeros, common) < d - 2) continue;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (static_cast<int>(k) == a || static_cast<int>(k) == b) continue;
          if (subset(common, rays[k].zeros)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        ++steps;
        if (options.step_limit > 0 && steps > options.step_limit) {
          throw ResourceLimitError("double description exceeded the step limit");
        }
        Ray<T> nr;
        nr.v.resize(d);
        const T sa = s[a];
        const T sb = absval(s[b]);
        for (int k = 0; k < d; ++k) {
          nr.v[k] = add(mul(sa, rays[b].v[k]), mul(sb, rays[a].v[k]));
        }
        make_primitive(nr.v);
        nr.zeros = common;
        nr.zeros[word] |= bit;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& ray : rays) {
    IntVector v(d);
    for (int k = 0; k < d; ++k) v[k] = to_integer(ray.v[k]);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
  });
  return out;
}

}  // namespace

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows,
                                    const HullOptions& options) {
  if (rows.empty()) throw ValidationError("no constraint rows");
  const int d = static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != d) throw ValidationError("ragged rows");
  }
  try {
    return run<std::int64_t>(rows, d, options);
  } catch (const Overflow&) {
    return run<Integer>(rows, d, options);
  }
}

int rank(const std::vector<std::vector<Rational>>& input) {
  std::vector<std::vector<Rational>> rows = input;
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int rk = 0;
  for (size_t c = 0; c < cols && rk < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rk; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rk]);
    for (int i = rk + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rk][c];
      for (size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rk][k];
    }
    ++rk;
  }
  return rk;
}

IntVector primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector out(v.size());
  Integer g = 0;
  for (size_t k = 0; k < v.size(); ++k) {
    Rational s = v[k] * l;
    out[k] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

std::vector<Halfspace> facets_of(const std::vector<std::vector<Rational>>& points,
                                 const std::vector<std::vector<Rational>>& rays,
                                 const HullOptions& options) {
  if (points.empty()) throw ValidationError("no points");
  const size_t dim = points[0].size();
  std::vector<IntVector> rows;
  rows.reserve(points.size() + rays.size());
  for (const auto& p : points) {
    std::vector<Rational> g(p);
    g.push_back(1);
    rows.push_back(primitive(g));
  }
  for (const auto& r : rays) {
    std::vector<Rational> g(r);
    g.push_back(0);
    rows.push_back(primitive(g));
  }
  for (const auto& r : rows) {
    if (r.size() != dim + 1) throw ValidationError("ragged generators");
  }
  std::vector<Halfspace> out;
  for (const auto& a : extreme_rays(rows, options)) {
    bool normal_zero = true;
    for (size_t k = 0; k < dim; ++k) normal_zero = normal_zero && a[k] == 0;
    if (normal_zero) continue;  // the face at infinity
    Halfspace h;
    for (size_t k = 0; k < dim; ++k) h.a.push_back(Rational(a[k]));
    h.b = Rational(-a[dim]);
    out.push_back(std::move(h));
  }
  return out;
}

Generators generators_of(const std::vector<std::vector<Rational>>& A,
                         const std::vector<Rational>& b,
                         const HullOptions& options) {
  if (A.empty() || A.size() != b.size()) {
    throw ValidationError("malformed inequality system");
  }
  const size_t dim = A[0].size();
  std::vector<IntVector> rows;
  rows.reserve(A.size() + 1);
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != dim) throw ValidationError("ragged inequality rows");
    std::vector<Rational> g(A[i]);
    g.push_back(-b[i]);
    rows.push_back(primitive(g));
  }
  IntVector t(dim + 1, Integer(0));
  t[dim] = 1;
  rows.push_back(t);
  Generators out;
  for (const auto& v : extreme_rays(rows, options)) {
    std::vector<Rational> w(dim);
    if (v[dim] != 0) {
      for (size_t k = 0; k < dim; ++k) w[k] = Rational(v[k], v[dim]);
      for (auto& x : w) x.canonicalize();
      out.points.push_back(std::move(w));
    } else {
      for (size_t k = 0; k < dim; ++k) w[k] = Rational(v[k]);
      out.rays.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace mixcut::poly

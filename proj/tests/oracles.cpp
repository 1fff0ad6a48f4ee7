#include "oracles.hpp"

#include <bit>
#include <cmath>
#include <set>

namespace nil7::oracle {

namespace {

bool is_perfect_square(long long t) {
  if (t < 0) return false;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(t))));
  while (r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  return r * r == t;
}

long mod(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<long> odd_prime_divisors(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long p = 3; p <= n; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2) prime = prime && p % d != 0;
    if (prime && n % p == 0) out.push_back(p);
  }
  return out;
}

}  // namespace

bool primitive_solution_mod(long a, long b, long p, long m) {
  std::vector<int> square_kind(static_cast<std::size_t>(m), 0);  // 1: some X with p | X, 2: some X unit
  for (long x = 0; x < m; ++x) {
    auto& k = square_kind[static_cast<std::size_t>(x * x % m)];
    k |= x % p == 0 ? 1 : 2;
  }
  for (long y = 0; y < m; ++y)
    for (long z = 0; z < m; ++z) {
      const long t = mod(a * y * y + b * z * z, m);
      const int k = square_kind[static_cast<std::size_t>(t)];
      if (!k) continue;
      const bool yz_unit = y % p != 0 || z % p != 0;
      if (yz_unit || (k & 2)) return true;
    }
  return false;
}

std::optional<bool> isotropic_by_search(long a, long b, long box) {
  for (long y = 0; y <= box; ++y)
    for (long z = 0; z <= box; ++z) {
      if (y == 0 && z == 0) continue;
      if (is_perfect_square(static_cast<long long>(a) * y * y + static_cast<long long>(b) * z * z)) return true;
    }
  if (a < 0 && b < 0) return false;
  if (!primitive_solution_mod(a, b, 2, 16)) return false;
  std::set<long> primes;
  for (long p : odd_prime_divisors(a)) primes.insert(p);
  for (long p : odd_prime_divisors(b)) primes.insert(p);
  for (long p : primes)
    if (!primitive_solution_mod(a, b, p, p * p)) return false;
  return std::nullopt;
}

bool jacobi(const StructureConstants& sc) {
  const int n = sc.dim();
  const Field& f = sc.field();
  auto e = [&](int i) { return unit_vector(f, static_cast<std::size_t>(n), static_cast<std::size_t>(i)); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector s = sc.bracket(e(i), sc.bracket(e(j), e(k)));
        const Vector t = sc.bracket(e(j), sc.bracket(e(k), e(i)));
        const Vector u = sc.bracket(e(k), sc.bracket(e(i), e(j)));
        for (std::size_t c = 0; c < s.size(); ++c) s[c] += t[c] + u[c];
        if (!is_zero(s)) return false;
      }
  return true;
}

std::vector<std::size_t> betti_from_brackets(const StructureConstants& sc) {
  // Cochains are alternating maps; (d w)(X_0..X_k) = sum_{i<j} (-1)^{i+j}
  // w([X_i, X_j], X_0, .., ^i, .., ^j, .., X_k) for trivial coefficients.
  const int n = sc.dim();
  const Field& f = sc.field();
  std::vector<std::vector<Mono>> basis(static_cast<std::size_t>(n + 1));
  for (Mono m = 0; m < (Mono{1} << n); ++m) basis[static_cast<std::size_t>(std::popcount(m))].push_back(m);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 2), 0);
  for (int k = 0; k < n; ++k) {
    const auto& src = basis[static_cast<std::size_t>(k)];
    const auto& dst = basis[static_cast<std::size_t>(k + 1)];
    Matrix d(f, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t r = 0; r < dst.size(); ++r) {
        std::vector<int> args;
        for (int i = 0; i < n; ++i)
          if (dst[r] >> i & 1) args.push_back(i);
        Scalar total = f.zero();
        for (std::size_t i = 0; i < args.size(); ++i)
          for (std::size_t j = i + 1; j < args.size(); ++j) {
            std::vector<int> rest;
            for (std::size_t t = 0; t < args.size(); ++t)
              if (t != i && t != j) rest.push_back(args[t]);
            for (int l = 0; l < n; ++l) {
              const Scalar a = sc.get(args[i], args[j], l);
              if (a.is_zero()) continue;
              // Evaluate the dual basis cochain src[c] on (X_l, rest...).
              std::vector<int> seq{l};
              seq.insert(seq.end(), rest.begin(), rest.end());
              Mono m = 0;
              bool repeated = false;
              for (int s : seq) {
                repeated = repeated || (m >> s & 1);
                m |= Mono{1} << s;
              }
              if (repeated || m != src[c]) continue;
              int inversions = 0;
              for (std::size_t x = 0; x < seq.size(); ++x)
                for (std::size_t y = x + 1; y < seq.size(); ++y) inversions += seq[x] > seq[y];
              const bool negative = ((i + j) % 2 == 1) != (inversions % 2 == 1);
              total += negative ? -a : a;
            }
          }
        d(r, c) = total;
      }
    }
    ranks[static_cast<std::size_t>(k + 1)] = rank(d);
  }
  std::vector<std::size_t> betti;
  for (int k = 0; k <= n; ++k) {
    const std::size_t dim = basis[static_cast<std::size_t>(k)].size();
    betti.push_back(dim - ranks[static_cast<std::size_t>(k + 1)] - ranks[static_cast<std::size_t>(k)]);
  }
  return betti;
}

}  // namespace nil7::oracle

#include "comax/number_theory.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace comax
{

namespace
{

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
  if (a && b > saturated / a)
    return saturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
  return a > saturated - b ? saturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp)
{
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i)
    out = sat_mul(out, base);
  return out;
}

/// Conjugate partition, padded to `length` entries.
std::vector<std::size_t> conjugate(const std::vector<std::size_t> &parts, std::size_t length)
{
  std::vector<std::size_t> out(length + 1, 0);
  for (std::size_t i = 1; i <= length; ++i)
    out[i - 1] = static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [i](std::size_t x) { return x >= i; }));
  return out;
}

} // namespace

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Factorization factorize(std::size_t n)
{
  Factorization out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

bool is_prime_power(std::size_t n) { return n > 1 && factorize(n).size() == 1; }

bool is_odd_prime_power(std::size_t n) { return is_prime_power(n) && n % 2 == 1; }

std::vector<std::size_t> prime_divisors(std::size_t n)
{
  std::vector<std::size_t> out;
  for (auto [p, e] : factorize(n))
    out.push_back(p);
  return out;
}

std::size_t ipow(std::size_t base, std::size_t exp)
{
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i)
    out *= base;
  return out;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(left, cap); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::size_t partition_count(std::size_t n)
{
  // Euler's recurrence via the pentagonal number theorem.
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    long long acc = 0;
    for (long long k = 1;; ++k) {
      const long long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long long>(m))
        break;
      const long long sign = (k % 2) ? 1 : -1;
      acc += sign * static_cast<long long>(p[m - static_cast<std::size_t>(g1)]);
      if (g2 <= static_cast<long long>(m))
        acc += sign * static_cast<long long>(p[m - static_cast<std::size_t>(g2)]);
    }
    p[m] = static_cast<std::size_t>(acc);
  }
  return p[n];
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q)
{
  if (k > n)
    return 0;
  // Product formula evaluated by repeated exact division keeps every
  // intermediate value an integer: [n, k] = [n-1, k-1] (q^n - 1) / (q^k - 1).
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::uint64_t num = sat_pow(q, n - k + i) - 1;
    std::uint64_t den = sat_pow(q, i) - 1;
    if (out == saturated || num == saturated - 1)
      return saturated;
    // The quotient is an integer and gcd(num, den) = 1 after reduction, so
    // den divides out.
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    out = sat_mul(out / den, num);
  }
  return out;
}

std::uint64_t abelian_p_subgroup_count(std::size_t p, const std::vector<std::size_t> &lambda)
{
  std::vector<std::size_t> parts = lambda;
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.rbegin(), parts.rend());
  if (parts.empty())
    return 1;
  const std::size_t height = parts.front();
  const auto lam_c = conjugate(parts, height);

  // Enumerate mu by its conjugate: non-increasing mu'_i <= lambda'_i.
  std::uint64_t total = 0;
  std::vector<std::size_t> mu_c(height + 1, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t cap) {
    if (i == height) {
      std::uint64_t count = 1;
      for (std::size_t j = 0; j < height; ++j) {
        const std::size_t next = mu_c[j + 1];
        count = sat_mul(count, sat_pow(p, next * (lam_c[j] - mu_c[j])));
        count = sat_mul(count, gaussian_binomial(lam_c[j] - next, mu_c[j] - next, p));
      }
      total = sat_add(total, count);
      return;
    }
    for (std::size_t v = 0; v <= std::min(cap, lam_c[i]); ++v) {
      mu_c[i] = v;
      rec(i + 1, v);
    }
    mu_c[i] = 0;
  };
  rec(0, lam_c[0]);
  return total;
}

} // namespace comax

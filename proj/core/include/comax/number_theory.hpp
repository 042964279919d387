#ifndef COMAX_NUMBER_THEORY_HPP
#define COMAX_NUMBER_THEORY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace comax
{

/// (prime, exponent) pairs with ascending primes.
using Factorization = std::vector<std::pair<std::size_t, std::size_t>>;

bool is_prime(std::size_t n);

/// n = p^k with k >= 1.
bool is_prime_power(std::size_t n);
bool is_odd_prime_power(std::size_t n);

Factorization factorize(std::size_t n);

/// Distinct prime divisors, ascending.
std::vector<std::size_t> prime_divisors(std::size_t n);

std::size_t ipow(std::size_t base, std::size_t exp);

/// Partitions of n as non-increasing part lists, in reverse lexicographic
/// order: {n}, {n-1, 1}, ..., {1, ..., 1}.
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

/// Number of partitions of n.
std::size_t partition_count(std::size_t n);

/// Gaussian binomial [n choose k]_q.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/**
 * Number of subgroups of the abelian p-group of type `lambda` (parts in any
 * order), summed over subgroup types mu contained in lambda with the
 * classical Delsarte/Birkhoff formula. Saturates at UINT64_MAX.
 */
std::uint64_t abelian_p_subgroup_count(std::size_t p, const std::vector<std::size_t> &lambda);

} // namespace comax

#endif // COMAX_NUMBER_THEORY_HPP

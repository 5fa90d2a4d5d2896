#pragma once

/**
 * @file oracles.hpp
 * @brief Factorization-based reference implementations.
 *
 * These exist to cross-check the factorization-free code and to gate the
 * classic criterion. The criterion path (core_arith, residue_struct, orbit,
 * indexing, solvability, tower) must not include this header.
 */

#include <string>
#include <utility>
#include <vector>

#include "core_arith.hpp"

namespace gec::oracles {

struct prime_power {
    nat prime;
    nat exponent;

    friend bool operator==(prime_power const&, prime_power const&) = default;
};

using factorization = std::vector<prime_power>;

/// Deterministic Miller-Rabin; the first twelve prime bases cover 64 bits.
inline bool is_prime(nat n)
{
    if (n < 2)
        return false;
    for (nat p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    nat d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (nat base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        nat x = pow_mod(base, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Trial division.
inline factorization factorize(nat m)
{
    if (m == 0)
        throw domain_error("factorize requires m >= 1");
    factorization out;
    for (nat p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0)
            continue;
        nat e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (m > 1)
        out.push_back({m, 1});
    return out;
}

inline nat power_of(prime_power const& pp)
{
    nat q = 1;
    for (nat i = 0; i < pp.exponent; ++i)
        q *= pp.prime;
    return q;
}

inline nat number_of_idempotents(nat m)
{
    return nat{1} << factorize(m).size();
}

inline bool is_square_free(nat m)
{
    for (auto const& pp : factorize(m))
        if (pp.exponent > 1)
            return false;
    return true;
}

/// Regular iff every prime of m dividing a divides it to m's full power.
inline bool regular_by_characterization(nat a, nat m)
{
    a %= m;
    for (auto const& pp : factorize(m)) {
        if (a % pp.prime == 0 && a % power_of(pp) != 0)
            return false;
    }
    return true;
}

/// x^k = a (mod m) is solvable iff it is solvable modulo every p^alpha || m;
/// each local congruence is checked exhaustively.
inline bool solvable_by_crt(nat a, nat k, nat m, nat scan_budget = default_scan_budget)
{
    if (m > scan_budget)
        throw scan_limit_error("solvable_by_crt: modulus " + std::to_string(m) +
                               " exceeds scan budget");
    for (auto const& pp : factorize(m)) {
        nat const q = power_of(pp);
        nat const target = a % q;
        bool found = false;
        for (nat x = 0; x < q && !found; ++x)
            found = pow_mod(x, k, q) == target;
        if (!found)
            return false;
    }
    return true;
}

inline nat totient_by_factorization(nat m)
{
    nat phi = m;
    for (auto const& pp : factorize(m))
        phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

} // namespace gec::oracles

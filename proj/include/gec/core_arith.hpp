#pragma once

/**
 * @file core_arith.hpp
 * @brief Exact 63-bit integer and modular arithmetic.
 *
 * Every value handled by the library fits in 63 bits. Modular products go
 * through a 128-bit intermediate, so nothing here wraps around silently;
 * results that cannot be represented raise gec::range_error.
 *
 * The module also carries the factorization-free coprime splitting of a
 * pair of integers, which the witness combination in orbit.hpp relies on.
 */

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace gec {

using nat = std::uint64_t;

inline constexpr nat nat_max = (nat{1} << 63) - 1;

/// Residue scans refuse moduli above this unless told otherwise.
inline constexpr nat default_scan_budget = 1'000'000;

constexpr nat gcd(nat a, nat b) noexcept
{
    while (b != 0) {
        nat t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Product a*b, or range_error when it leaves the 63-bit range.
constexpr nat checked_mul(nat a, nat b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > nat_max)
        throw range_error("product " + std::to_string(a) + "*" + std::to_string(b) +
                          " exceeds 63 bits");
    return static_cast<nat>(p);
}

constexpr nat lcm(nat a, nat b)
{
    if (a == 0 || b == 0)
        throw domain_error("lcm is defined for positive arguments only");
    return checked_mul(a / gcd(a, b), b);
}

constexpr nat mul_mod(nat a, nat b, nat m) noexcept
{
    return static_cast<nat>(static_cast<unsigned __int128>(a) * b % m);
}

/// a^n mod m by square-and-multiply. Exponent 0 gives 1 mod m; the
/// idempotent reading of a^0 lives in residue_struct.hpp (signed_pow).
constexpr nat pow_mod(nat a, nat n, nat m)
{
    if (m == 0)
        throw domain_error("modulus must be at least 1");
    nat result = 1 % m;
    a %= m;
    while (n != 0) {
        if (n & 1)
            result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        n >>= 1;
    }
    return result;
}

/// Inverse of a modulo m via extended Euclid, for gcd(a, m) = 1.
/// Returns the representative in [0, m); m = 1 yields 0.
constexpr nat inverse_mod(nat a, nat m)
{
    if (m == 0)
        throw domain_error("modulus must be at least 1");
    // Coefficients stay bounded by m, so signed 128-bit is ample.
    __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw domain_error(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    __int128 mm = static_cast<__int128>(m);
    t0 %= mm;
    if (t0 < 0)
        t0 += mm;
    return static_cast<nat>(t0);
}

/// Euler's totient by counting x in [1, m] coprime to m.
inline nat totient(nat m, nat scan_budget = default_scan_budget)
{
    if (m == 0)
        throw domain_error("totient is defined for m >= 1");
    if (m > scan_budget)
        throw scan_limit_error("totient(" + std::to_string(m) + ") exceeds scan budget " +
                               std::to_string(scan_budget));
    nat count = 0;
    for (nat x = 1; x <= m; ++x)
        if (gcd(x, m) == 1)
            ++count;
    return count;
}

/// Largest divisor of c built only from primes dividing u, found by
/// iterated gcd without factoring either argument.
constexpr nat part_of(nat c, nat u)
{
    if (c == 0 || u == 0)
        throw domain_error("part_of requires positive arguments");
    nat part = 1;
    nat g = gcd(c, u);
    while (g > 1) {
        part *= g;
        c /= g;
        g = gcd(c, g);
    }
    return part;
}

struct coprime_split_t {
    nat u1, u2;
    nat v1, v2;
    nat w1, w2;

    friend constexpr bool operator==(coprime_split_t const&, coprime_split_t const&) = default;
};

/// Splits u, v and w | gcd(u, v) as u = u1*u2, v = v1*v2, w = w1*w2 with
/// gcd(u, v) = u2*v1, w1 | v1 | u1, w2 | u2 | v2 and the pairs (u1,u2),
/// (v1,v2), (w1,w2), (u1,v2), (u2,v1) coprime.
///
/// With C = gcd(u, v), U = u/C, V = v/C the common part C is cut into A
/// (primes of U) and B (primes of V). Primes of C dividing neither U nor V
/// are put on the A side. Only the listed relations are contractual.
constexpr coprime_split_t coprime_split(nat u, nat v, nat w)
{
    if (u == 0 || v == 0 || w == 0)
        throw domain_error("coprime_split requires positive arguments");
    nat const c = gcd(u, v);
    if (c % w != 0)
        throw domain_error("coprime_split: " + std::to_string(w) + " does not divide gcd(" +
                           std::to_string(u) + ", " + std::to_string(v) + ")");
    nat const big_u = u / c;
    nat const big_v = v / c;
    nat const a0 = part_of(c, big_u);
    nat const b = part_of(c, big_v);
    nat const leftover = c / (a0 * b);
    nat const a = a0 * leftover;

    coprime_split_t s{};
    s.u1 = a * big_u;
    s.u2 = b;
    s.v1 = a;
    s.v2 = big_v * b;
    s.w1 = gcd(w, s.v1);
    s.w2 = w / s.w1;
    return s;
}

/// True iff s satisfies every relation promised by coprime_split for (u, v, w).
constexpr bool satisfies_split_invariants(coprime_split_t const& s, nat u, nat v, nat w) noexcept
{
    auto divides = [](nat d, nat n) { return d != 0 && n % d == 0; };
    unsigned __int128 uu = static_cast<unsigned __int128>(s.u1) * s.u2;
    unsigned __int128 vv = static_cast<unsigned __int128>(s.v1) * s.v2;
    unsigned __int128 ww = static_cast<unsigned __int128>(s.w1) * s.w2;
    unsigned __int128 cc = static_cast<unsigned __int128>(s.u2) * s.v1;
    return uu == u && vv == v && ww == w && cc == gcd(u, v) &&
           divides(s.w1, s.v1) && divides(s.v1, s.u1) &&
           divides(s.w2, s.u2) && divides(s.u2, s.v2) &&
           gcd(s.u1, s.u2) == 1 && gcd(s.v1, s.v2) == 1 && gcd(s.w1, s.w2) == 1 &&
           gcd(s.u1, s.v2) == 1 && gcd(s.u2, s.v1) == 1;
}

} // namespace gec

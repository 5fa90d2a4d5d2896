#pragma once

/**
 * @file classic.hpp
 * @brief Euler's criterion for moduli with a primitive root.
 *
 * Kept apart from solvability.hpp because recognising 2, 4, p^a and 2p^a
 * needs a factorization.
 */

#include <string>

#include "core_arith.hpp"
#include "oracles.hpp"
#include "residue_struct.hpp"
#include "solvability.hpp"

namespace gec {

/// m in {1, 2, 4} or m = p^a, 2p^a for an odd prime p.
inline bool has_primitive_root(nat m)
{
    if (m == 0)
        throw domain_error("has_primitive_root requires m >= 1");
    if (m == 1 || m == 2 || m == 4)
        return true;
    nat odd = m % 2 == 0 ? m / 2 : m;
    if (odd % 2 == 0)
        return false;
    return oracles::factorize(odd).size() == 1;
}

/// a^(phi/(k,phi)) = 1, for gcd(a, m) = 1 and m with a primitive root.
inline bool classic_criterion(nat a, nat k, modulus_ctx const& ctx)
{
    detail::require_positive_k(k, "classic_criterion");
    nat const m = ctx.modulus();
    if (!has_primitive_root(m))
        throw domain_error("classic_criterion: " + std::to_string(m) +
                           " is not of the form 2, 4, p^a or 2p^a");
    nat const r = ctx.reduce(a);
    if (gcd(r, m) != 1)
        throw domain_error("classic_criterion: " + std::to_string(r) + " is not coprime to " +
                           std::to_string(m));
    nat const phi = ctx.phi();
    return ctx.pow(r, phi / gcd(k, phi)) == 1 % m;
}

inline solvability_report classic_report(nat a, nat k, modulus_ctx const& ctx)
{
    bool const v = classic_criterion(a, k, ctx);
    nat const phi = ctx.phi();
    nat const r = ctx.reduce(a);
    return {ctx.modulus(), k, r, v, solve_method::classic, phi, ctx.pow(r, phi / gcd(k, phi)),
            std::nullopt};
}

} // namespace gec

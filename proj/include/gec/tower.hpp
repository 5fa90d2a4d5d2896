#pragma once

/**
 * @file tower.hpp
 * @brief Power towers b^b^...^b modulo m by order descent.
 *
 * With n = |b|_m and e = b^n mod m, every exponent E = q*n + r with q >= 1
 * satisfies b^E = e * b^r (mod m), whether or not b is regular. So the
 * tower only needs its exponent modulo n, which is the same problem one
 * level down with the strictly smaller modulus n <= phi(m) < m.
 */

#include <optional>
#include <string>
#include <vector>

#include "core_arith.hpp"
#include "residue_struct.hpp"

namespace gec {

/// a_0 = 1, a_h = base^(a_(h-1)); the query asks for a_height mod modulus.
struct tower_query {
    nat base;
    nat height;
    nat modulus;
};

struct chain_level {
    nat modulus;
    nat order; ///< |base|_modulus, also the next level's modulus
    nat idem;  ///< base^order mod modulus

    friend bool operator==(chain_level const&, chain_level const&) = default;
};

/// Moduli m, |b|_m, ||b|_m|..., stopping at modulus 1 or order 1.
inline std::vector<chain_level> descent_chain(nat base, nat m, nat scan_budget = default_scan_budget)
{
    std::vector<chain_level> chain;
    nat cur = m;
    for (;;) {
        modulus_ctx ctx(cur, scan_budget);
        auto p = order(base, ctx);
        chain.push_back({cur, p.ord, p.idem});
        if (cur == 1 || p.ord == 1)
            break;
        if (p.ord >= cur)
            throw invariant_violation("descent_chain: order " + std::to_string(p.ord) +
                                      " does not drop below modulus " + std::to_string(cur));
        cur = p.ord;
    }
    return chain;
}

namespace detail {

/// min(base^exp, nat_max) for base >= 2.
inline nat saturating_pow(nat base, nat exp) noexcept
{
    nat result = 1;
    for (nat i = 0; i < exp; ++i) {
        unsigned __int128 p = static_cast<unsigned __int128>(result) * base;
        if (p >= nat_max)
            return nat_max;
        result = static_cast<nat>(p);
    }
    return result;
}

/// min(a_h, nat_max). Any tower of height >= 64 is saturated already.
inline nat saturated_tower(nat base, nat height) noexcept
{
    nat value = 1;
    for (nat h = 0; h < height && value != nat_max; ++h)
        value = saturating_pow(base, value);
    return value;
}

inline nat tower_at(nat base, nat height, std::vector<chain_level> const& chain, std::size_t level)
{
    auto const& lv = chain[level];
    if (lv.modulus == 1)
        return 0;
    if (height == 0)
        return 1;
    nat const exponent = saturated_tower(base, height - 1);
    if (exponent < lv.order)
        return pow_mod(base, exponent, lv.modulus);
    // exponent >= order: only its residue modulo the order matters
    nat const r = lv.order == 1 ? 0 : tower_at(base, height - 1, chain, level + 1);
    return mul_mod(lv.idem, pow_mod(base, r, lv.modulus), lv.modulus);
}

} // namespace detail

inline nat tower_mod(tower_query const& q, nat scan_budget = default_scan_budget)
{
    if (q.base < 2)
        throw domain_error("tower base must be at least 2");
    if (q.modulus == 0)
        throw domain_error("modulus must be at least 1");
    auto chain = descent_chain(q.base, q.modulus, scan_budget);
    return detail::tower_at(q.base, q.height, chain, 0);
}

} // namespace gec

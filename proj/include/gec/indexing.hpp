#pragma once

/**
 * @file indexing.hpp
 * @brief Discrete index, primitive order omega_m(a) and generalized
 * primitive roots.
 */

#include <optional>
#include <string>

#include "core_arith.hpp"
#include "orbit.hpp"
#include "residue_struct.hpp"

namespace gec {

struct index_result {
    std::optional<nat> value; ///< least n >= 1 with b^n = a

    bool exists() const noexcept { return value.has_value(); }
};

inline index_result index_of(nat b, nat a, modulus_ctx const& ctx)
{
    return {detail::first_exponent(b, a, ctx)};
}

struct omega_result {
    nat omega;   ///< max |b| over regular b whose orbit contains a
    nat witness; ///< smallest b attaining it
};

/// Definitional search for omega_m(a). Only R_m^idem(a) is scanned: the
/// one idempotent on orb(b) is idem(b), so any b with a in orb(b) shares
/// the class of a.
inline omega_result omega_search(nat a, modulus_ctx const& ctx)
{
    auto pa = require_regular(a, ctx, "omega");
    omega_result best{pa.ord, pa.a};
    for (nat b = 0; b < ctx.modulus(); ++b) {
        // one pass computes |b|, idem(b) and whether a occurs in orb(b)
        nat x = b;
        nat n = 1;
        bool seen = x == pa.a;
        while (!ctx.in_idempotents(x)) {
            x = ctx.mul(x, b);
            ++n;
            seen = seen || x == pa.a;
        }
        if (!seen || x != pa.idem || ctx.mul(x, b) != b)
            continue;
        if (n > best.omega || (n == best.omega && b < best.witness))
            best = {n, b};
    }
    return best;
}

inline nat omega(nat a, modulus_ctx const& ctx)
{
    return omega_search(a, ctx).omega;
}

/// Left side of (k, |b|) | ind_b(a)  <=>  a^(|b|/(k,|b|)) in E_m.
inline bool index_divisibility_check(nat b, nat a, nat k, modulus_ctx const& ctx)
{
    if (k == 0)
        throw domain_error("index_divisibility_check: k must be at least 1");
    auto [pb, pa] = detail::require_same_class(b, a, ctx, "index_divisibility_check");
    auto ind = index_of(pb.a, pa.a, ctx);
    if (!ind.exists())
        throw domain_error("index_divisibility_check: " + std::to_string(pa.a) +
                           " has no index to base " + std::to_string(pb.a));
    return *ind.value % gcd(k, pb.ord) == 0;
}

inline bool is_generalized_primitive_root(nat g, modulus_ctx const& ctx)
{
    auto pg = require_regular(g, ctx, "is_generalized_primitive_root");
    return omega(pg.a, ctx) == pg.ord;
}

} // namespace gec

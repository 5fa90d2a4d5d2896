#pragma once

/**
 * @file orbit.hpp
 * @brief Orbits, the orbit gcd D_m(b, c) and the witness combination.
 *
 * For b, c in one group R_m^e the exponents n with b^n in orb(c) are
 * exactly the multiples of D_m(b, c), so orb(b) and orb(c) meet in the
 * orbit of b^D. combine_witnesses turns two residues whose orbits both
 * contain a into a single d of order lcm(|b|, |c|) whose orbit still
 * contains a, following the constructive argument step by step.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core_arith.hpp"
#include "residue_struct.hpp"

namespace gec {

struct orbit_view {
    nat base;
    std::vector<nat> elements; ///< base^1, ..., base^|base|, the last one idem(base)
};

inline orbit_view orbit(nat a, modulus_ctx const& ctx)
{
    auto p = order(a, ctx);
    orbit_view v{p.a, {}};
    v.elements.reserve(p.ord);
    nat x = p.a;
    for (nat n = 1; n <= p.ord; ++n) {
        v.elements.push_back(x);
        x = ctx.mul(x, p.a);
    }
    return v;
}

namespace detail {

/// Least n in [1, |b|] with b^n = a, scanning the orbit of b.
inline std::optional<nat> first_exponent(nat b, nat a, modulus_ctx const& ctx)
{
    auto p = order(b, ctx);
    nat const target = ctx.reduce(a);
    nat x = p.a;
    for (nat n = 1; n <= p.ord; ++n) {
        if (x == target)
            return n;
        x = ctx.mul(x, p.a);
    }
    return std::nullopt;
}

/// Membership bitmap over [0, m) for the elements of one orbit.
inline std::vector<bool> orbit_mask(orbit_view const& v, modulus_ctx const& ctx)
{
    std::vector<bool> mask(ctx.modulus(), false);
    for (nat x : v.elements)
        mask[x] = true;
    return mask;
}

/// Both arguments regular with a shared idempotent; returns their profiles.
inline std::pair<order_profile, order_profile>
require_same_class(nat b, nat c, modulus_ctx const& ctx, char const* what)
{
    auto pb = require_regular(b, ctx, what);
    auto pc = require_regular(c, ctx, what);
    if (pb.idem != pc.idem)
        throw domain_error(std::string(what) + ": " + std::to_string(pb.a) + " and " +
                           std::to_string(pc.a) + " lie in different idempotent classes (" +
                           std::to_string(pb.idem) + " vs " + std::to_string(pc.idem) + ")");
    return {pb, pc};
}

inline nat d_gcd_profiled(order_profile const& pb, order_profile const& pc, modulus_ctx const& ctx)
{
    auto mask = orbit_mask(orbit(pc.a, ctx), ctx);
    nat g = 0;
    nat x = pb.a;
    for (nat n = 1; n <= pb.ord; ++n) {
        if (mask[x])
            g = gcd(g, n);
        x = ctx.mul(x, pb.a);
    }
    return g;
}

} // namespace detail

/// gcd of the exponents n in [1, |b|] with b^n in orb(c). Divides |b|.
inline nat d_gcd(nat b, nat c, modulus_ctx const& ctx)
{
    auto [pb, pc] = detail::require_same_class(b, c, ctx, "d_gcd");
    return detail::d_gcd_profiled(pb, pc, ctx);
}

/// orb(b) intersected with orb(c), returned as the orbit of b^D_m(b, c).
inline orbit_view orbit_intersection(nat b, nat c, modulus_ctx const& ctx)
{
    nat const d = d_gcd(b, c, ctx);
    return orbit(ctx.pow(b, d), ctx);
}

/// Intermediate values of one witness combination, kept for display.
struct witness_combination {
    nat d;              ///< combined witness
    nat order_d;        ///< |d|_m = lcm(|b|, |c|)
    nat index;          ///< least n with d^n = a
    nat d_bc, d_cb;     ///< D_m(b, c) and D_m(c, b)
    nat w;              ///< D_m(b, c) * gcd(|b|, |c|) / |b|
    coprime_split_t split;
    nat k;              ///< (b^D_bc)^k = c^D_cb
    nat n;              ///< inverse of v2 + k*u1 modulo |b^D_bc|
    nat i;              ///< (b^D_bc)^i = a
    nat e;              ///< w * (u1/v1) * (v2/u2)
};

/// Given a, b, c in one R_m^e with a in orb(b) and orb(c), builds
/// d = b^u2 * c^v1 with |d| = lcm(|b|, |c|) and a in orb(d). Both
/// postconditions are re-checked before returning.
inline witness_combination combine_witnesses(nat a, nat b, nat c, modulus_ctx const& ctx)
{
    auto [pb, pc] = detail::require_same_class(b, c, ctx, "combine_witnesses");
    auto pa = require_regular(a, ctx, "combine_witnesses");
    if (pa.idem != pb.idem)
        throw domain_error("combine_witnesses: " + std::to_string(pa.a) +
                           " is not in the idempotent class of the witnesses");
    if (!detail::first_exponent(pb.a, pa.a, ctx) || !detail::first_exponent(pc.a, pa.a, ctx))
        throw domain_error("combine_witnesses: " + std::to_string(pa.a) +
                           " is not in both orbits of " + std::to_string(pb.a) + " and " +
                           std::to_string(pc.a));

    witness_combination r{};
    r.d_bc = detail::d_gcd_profiled(pb, pc, ctx);
    r.d_cb = detail::d_gcd_profiled(pc, pb, ctx);
    nat const g = gcd(pb.ord, pc.ord);
    r.w = r.d_bc * g / pb.ord;
    if (r.w == 0 || r.d_bc * g % pb.ord != 0)
        throw invariant_violation("combine_witnesses: D_m(b,c)*gcd(|b|,|c|) not divisible by |b|");
    r.split = coprime_split(pb.ord, pc.ord, r.w);
    auto const& s = r.split;

    nat const b_d = ctx.pow(pb.a, r.d_bc);
    nat const c_d = ctx.pow(pc.a, r.d_cb);
    nat const order_bd = s.u2 * s.v1 / s.w1 / s.w2;

    auto k = detail::first_exponent(b_d, c_d, ctx);
    auto i = detail::first_exponent(b_d, pa.a, ctx);
    if (!k || !i)
        throw invariant_violation("combine_witnesses: intersection orbit misses c^D or a");
    r.k = *k;
    r.i = *i;

    if (order_bd == 1) {
        r.n = 1;
    } else {
        nat const lin = static_cast<nat>(
            (static_cast<unsigned __int128>(r.k) * s.u1 + s.v2) % order_bd);
        r.n = inverse_mod(lin, order_bd);
    }
    r.e = r.w * (s.u1 / s.v1) * (s.v2 / s.u2);

    r.d = ctx.mul(ctx.pow(pb.a, s.u2), ctx.pow(pc.a, s.v1));

    // d^(E*N*I) = a, evaluated as three successive powers
    nat const reached = ctx.pow(ctx.pow(ctx.pow(r.d, r.e), r.n), r.i);
    nat const want = lcm(pb.ord, pc.ord);
    auto pd = order(r.d, ctx);
    auto idx = detail::first_exponent(r.d, pa.a, ctx);
    if (reached != pa.a || pd.ord != want || !idx)
        throw invariant_violation("combine_witnesses(" + std::to_string(pa.a) + ", " +
                                  std::to_string(pb.a) + ", " + std::to_string(pc.a) + ") mod " +
                                  std::to_string(ctx.modulus()) + ": constructed d = " +
                                  std::to_string(r.d) + " fails its postconditions");
    r.order_d = pd.ord;
    r.index = *idx;
    return r;
}

} // namespace gec

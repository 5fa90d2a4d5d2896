#pragma once

/**
 * @file solvability.hpp
 * @brief Deciding x^k = a (mod m) without factoring m.
 *
 * For regular a the congruence is solvable iff a^(w/(k,w)) is idempotent,
 * w = omega_m(a). Replacing w by phi(m) gives a condition that is only
 * necessary. Nothing on this path factors m; the prime-power classic
 * criterion lives in classic.hpp.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core_arith.hpp"
#include "indexing.hpp"
#include "residue_struct.hpp"

namespace gec {

enum class solve_method { criterion, necessary_only, brute, classic };

constexpr std::string_view to_string(solve_method m) noexcept
{
    switch (m) {
    case solve_method::criterion: return "criterion";
    case solve_method::necessary_only: return "necessary";
    case solve_method::brute: return "brute";
    case solve_method::classic: return "classic";
    }
    return "unknown";
}

struct solvability_report {
    nat m;
    nat k;
    nat a;
    bool verdict;
    solve_method method;
    std::optional<nat> omega_used;
    std::optional<nat> criterion_power; ///< a^(w/(k,w)) mod m for the exponent base w used
    std::optional<nat> sample_solution;
};

namespace detail {

inline void require_positive_k(nat k, char const* what)
{
    if (k == 0)
        throw domain_error(std::string(what) + ": k must be at least 1");
}

} // namespace detail

/// a^(phi/(k,phi)) in E_m. False rules solutions out; true decides nothing.
inline bool necessary_condition(nat a, nat k, modulus_ctx const& ctx)
{
    detail::require_positive_k(k, "necessary_condition");
    auto pa = require_regular(a, ctx, "necessary_condition");
    nat const phi = ctx.phi();
    return ctx.in_idempotents(ctx.pow(pa.a, phi / gcd(k, phi)));
}

inline solvability_report necessary_report(nat a, nat k, modulus_ctx const& ctx)
{
    bool const v = necessary_condition(a, k, ctx);
    nat const phi = ctx.phi();
    nat const r = ctx.reduce(a);
    return {ctx.modulus(), k, r, v, solve_method::necessary_only, phi,
            ctx.pow(r, phi / gcd(k, phi)), std::nullopt};
}

/// Generalized criterion; defined for regular a only.
inline solvability_report solvable(nat a, nat k, modulus_ctx const& ctx)
{
    detail::require_positive_k(k, "solvable");
    auto pa = require_regular(a, ctx, "solvable");
    nat const w = omega(pa.a, ctx);
    nat const power = ctx.pow(pa.a, w / gcd(k, w));
    return {ctx.modulus(), k, pa.a, ctx.in_idempotents(power), solve_method::criterion,
            w, power, std::nullopt};
}

/// Every x in [0, m) with x^k = a, ascending.
inline std::vector<nat> solve_brute(nat a, nat k, modulus_ctx const& ctx)
{
    detail::require_positive_k(k, "solve_brute");
    ctx.require_scannable("solve_brute");
    nat const r = ctx.reduce(a);
    std::vector<nat> out;
    for (nat x = 0; x < ctx.modulus(); ++x)
        if (ctx.pow(x, k) == r)
            out.push_back(x);
    return out;
}

inline solvability_report brute_report(nat a, nat k, modulus_ctx const& ctx)
{
    auto sols = solve_brute(a, k, ctx);
    solvability_report rep{ctx.modulus(), k, ctx.reduce(a), !sols.empty(), solve_method::brute,
                           std::nullopt, std::nullopt, std::nullopt};
    if (!sols.empty())
        rep.sample_solution = sols.front();
    return rep;
}

} // namespace gec

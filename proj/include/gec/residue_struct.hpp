#pragma once

/**
 * @file residue_struct.hpp
 * @brief Idempotents, generalized order and regular residues modulo m.
 *
 * For every residue a there is a least n >= 1 with a^n idempotent; that n
 * is the order |a|_m and e = a^n mod m is the idempotent of a. Residues
 * with a^(|a|+1) = a are regular, and those sharing one idempotent e form
 * an abelian group R_m^e with unit e. Inside such a group a^0 means e,
 * not 1, which is what signed_pow implements.
 *
 * Residues are canonical values in [0, m); the class of 0 is the same
 * object as the class of m.
 */

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core_arith.hpp"

namespace gec {

/// A modulus together with lazily built tables that depend only on it.
/// Queries on a shared instance are safe from several threads; each
/// cache is built exactly once.
class modulus_ctx {
public:
    explicit modulus_ctx(nat m, nat scan_budget = default_scan_budget)
        : m_(m), budget_(scan_budget)
    {
        if (m == 0)
            throw domain_error("modulus must be at least 1");
        if (m > nat_max)
            throw range_error("modulus exceeds 63 bits");
    }

    modulus_ctx(modulus_ctx const&) = delete;
    modulus_ctx& operator=(modulus_ctx const&) = delete;

    nat modulus() const noexcept { return m_; }
    nat scan_budget() const noexcept { return budget_; }
    nat reduce(nat x) const noexcept { return x % m_; }
    nat mul(nat a, nat b) const noexcept { return mul_mod(a, b, m_); }
    nat pow(nat a, nat n) const { return pow_mod(a, n, m_); }

    /// Throws scan_limit_error when m is above the budget.
    void require_scannable(char const* what) const
    {
        if (m_ > budget_)
            throw scan_limit_error(std::string(what) + ": modulus " + std::to_string(m_) +
                                   " exceeds scan budget " + std::to_string(budget_));
    }

    nat phi() const
    {
        std::call_once(phi_once_, [this] { phi_ = totient(m_, budget_); });
        return phi_;
    }

    /// E_m in ascending order, by a linear scan of [0, m).
    std::span<nat const> idempotents() const
    {
        std::call_once(idem_once_, [this] {
            require_scannable("idempotents");
            std::vector<nat> out;
            for (nat e = 0; e < m_; ++e)
                if (mul_mod(e, e, m_) == e)
                    out.push_back(e);
            idem_ = std::move(out);
        });
        return idem_;
    }

    /// Membership in E_m through the cached table.
    bool in_idempotents(nat x) const
    {
        auto table = idempotents();
        return std::binary_search(table.begin(), table.end(), reduce(x));
    }

private:
    nat m_;
    nat budget_;
    mutable std::once_flag phi_once_;
    mutable std::once_flag idem_once_;
    mutable nat phi_ = 0;
    mutable std::vector<nat> idem_;
};

inline bool is_idempotent(nat e, modulus_ctx const& ctx) noexcept
{
    nat r = ctx.reduce(e);
    return ctx.mul(r, r) == r;
}

inline std::vector<nat> idempotents(modulus_ctx const& ctx)
{
    auto table = ctx.idempotents();
    return {table.begin(), table.end()};
}

struct order_profile {
    nat a;        ///< canonical residue
    nat ord;      ///< |a|_m
    nat idem;     ///< a^|a|_m mod m
    bool regular; ///< a^(|a|_m + 1) = a

    friend bool operator==(order_profile const&, order_profile const&) = default;
};

/// Generalized order by incremental multiplication; at most phi(m) steps.
inline order_profile order(nat a, modulus_ctx const& ctx)
{
    ctx.require_scannable("order");
    nat const r = ctx.reduce(a);
    nat x = r;
    nat n = 1;
    while (!ctx.in_idempotents(x)) {
        x = ctx.mul(x, r);
        ++n;
        if (n > ctx.modulus())
            throw invariant_violation("order of " + std::to_string(r) + " mod " +
                                      std::to_string(ctx.modulus()) + " does not terminate");
    }
    return {r, n, x, ctx.mul(x, r) == r};
}

/// Profiles of every residue, indexed by residue value.
inline std::vector<order_profile> order_table(modulus_ctx const& ctx)
{
    ctx.require_scannable("order_table");
    std::vector<order_profile> out;
    out.reserve(ctx.modulus());
    for (nat a = 0; a < ctx.modulus(); ++a)
        out.push_back(order(a, ctx));
    return out;
}

inline bool is_regular(nat a, modulus_ctx const& ctx)
{
    return order(a, ctx).regular;
}

inline order_profile require_regular(nat a, modulus_ctx const& ctx, char const* what)
{
    auto p = order(a, ctx);
    if (!p.regular)
        throw domain_error(std::string(what) + ": " + std::to_string(p.a) +
                           " is not regular modulo " + std::to_string(ctx.modulus()));
    return p;
}

/// R_m, or R_m^e when a class is given.
inline std::vector<nat> regulars(modulus_ctx const& ctx, std::optional<nat> cls = std::nullopt)
{
    ctx.require_scannable("regulars");
    if (cls && (*cls >= ctx.modulus() || !ctx.in_idempotents(*cls)))
        throw domain_error(std::to_string(*cls) + " is not an idempotent modulo " +
                           std::to_string(ctx.modulus()));
    std::vector<nat> out;
    for (nat a = 0; a < ctx.modulus(); ++a) {
        auto p = order(a, ctx);
        if (p.regular && (!cls || p.idem == *cls))
            out.push_back(a);
    }
    return out;
}

/// a^(|a|-1); for |a| = 1 the exponent 0 is read as a^0 = idem(a).
inline nat inverse(nat a, modulus_ctx const& ctx)
{
    auto p = require_regular(a, ctx, "inverse");
    if (p.ord == 1)
        return p.idem;
    return ctx.pow(p.a, p.ord - 1);
}

/// a^i for signed i inside R_m^e: i = 0 gives idem(a), i < 0 powers the inverse.
inline nat signed_pow(nat a, std::int64_t i, modulus_ctx const& ctx)
{
    auto p = require_regular(a, ctx, "signed_pow");
    if (i == 0)
        return p.idem;
    if (i > 0)
        return ctx.pow(p.a, static_cast<nat>(i));
    nat const inv = p.ord == 1 ? p.idem : ctx.pow(p.a, p.ord - 1);
    // -(i + 1) + 1 avoids negating INT64_MIN
    nat const magnitude = static_cast<nat>(-(i + 1)) + 1;
    return ctx.pow(inv, magnitude);
}

} // namespace gec

#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive property sweeps behind `gec verify`.
 *
 * Each sweep enumerates every modulus up to a bound and compares the
 * factorization-free implementations against definitions or the
 * oracles. Sweeps are independent and run concurrently; the report keeps
 * a fixed order.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "classic.hpp"
#include "core_arith.hpp"
#include "indexing.hpp"
#include "oracles.hpp"
#include "orbit.hpp"
#include "residue_struct.hpp"
#include "solvability.hpp"
#include "tower.hpp"

namespace gec::verify {

struct options {
    nat max_m = 60;
    nat max_k = 12;
};

struct check_result {
    explicit check_result(std::string n) : name(std::move(n)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }

    void expect(bool ok, std::function<std::string()> const& describe)
    {
        ++cases;
        if (ok)
            return;
        if (failures++ == 0)
            first_failure = describe();
    }
};

/// Regular residues of one modulus grouped by idempotent.
inline std::map<nat, std::vector<nat>> regular_classes(modulus_ctx const& ctx)
{
    std::map<nat, std::vector<nat>> classes;
    for (nat a = 0; a < ctx.modulus(); ++a) {
        auto p = order(a, ctx);
        if (p.regular)
            classes[p.idem].push_back(a);
    }
    return classes;
}

inline std::string at(nat m, std::initializer_list<std::pair<char const*, nat>> vals)
{
    std::string s = "m=" + std::to_string(m);
    for (auto const& [k, v] : vals)
        s += std::string(" ") + k + "=" + std::to_string(v);
    return s;
}

inline check_result generalized_euler(options const& o)
{
    check_result r{"generalized_euler"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (nat a = 0; a < m; ++a)
            r.expect(ctx.in_idempotents(ctx.pow(a, ctx.phi())), [&] { return at(m, {{"a", a}}); });
    }
    return r;
}

inline check_result idempotent_census(options const& o)
{
    check_result r{"idempotent_census"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        r.expect(ctx.idempotents().size() == oracles::number_of_idempotents(m),
                 [&] { return at(m, {{"count", ctx.idempotents().size()}}); });
    }
    return r;
}

inline check_result order_structure(options const& o)
{
    check_result r{"order_structure"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (nat a = 0; a < m; ++a) {
            auto p = order(a, ctx);
            if (!p.regular)
                continue;
            r.expect(ctx.phi() % p.ord == 0, [&] { return at(m, {{"a", a}, {"ord", p.ord}}); });
            for (nat k = 1; k <= o.max_k; ++k) {
                nat const want = p.ord / gcd(k, p.ord);
                r.expect(order(ctx.pow(a, k), ctx).ord == want,
                         [&] { return at(m, {{"a", a}, {"k", k}}); });
            }
        }
    }
    return r;
}

inline check_result regularity_equivalence(options const& o)
{
    check_result r{"regularity_equivalence"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        nat const top = std::min<nat>(2 * ctx.phi(), 48);
        for (nat a = 0; a < m; ++a) {
            auto p = order(a, ctx);
            // (ord + 1, 1) is the pair that separates non-regular residues
            bool holds = ctx.pow(a, p.ord + 1) == a;
            for (nat k = 1; k <= top && holds; ++k)
                for (nat l = 1; l <= top && holds; ++l)
                    holds = (ctx.pow(a, k) == ctx.pow(a, l)) == (k % p.ord == l % p.ord);
            r.expect(holds == p.regular, [&] { return at(m, {{"a", a}}); });
        }
    }
    return r;
}

inline check_result regular_characterization(options const& o)
{
    check_result r{"regular_characterization"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        nat count = 0;
        for (nat a = 0; a < m; ++a) {
            bool const reg = is_regular(a, ctx);
            count += reg;
            r.expect(reg == oracles::regular_by_characterization(a, m),
                     [&] { return at(m, {{"a", a}}); });
        }
        r.expect((count == m) == oracles::is_square_free(m), [&] { return at(m, {}); });
    }
    return r;
}

inline check_result group_axioms(options const& o)
{
    check_result r{"group_axioms"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (auto const& [e, members] : regular_classes(ctx)) {
            std::set<nat> cls(members.begin(), members.end());
            for (nat a : members) {
                r.expect(ctx.mul(a, e) == a, [&] { return at(m, {{"e", e}, {"a", a}}); });
                nat const inv = inverse(a, ctx);
                r.expect(cls.count(inv) && ctx.mul(a, inv) == e,
                         [&] { return at(m, {{"e", e}, {"a", a}, {"inv", inv}}); });
                nat solutions = 0;
                for (nat b : members) {
                    r.expect(cls.count(ctx.mul(a, b)) == 1,
                             [&] { return at(m, {{"e", e}, {"a", a}, {"b", b}}); });
                    solutions += ctx.mul(a, b) == e;
                }
                r.expect(solutions == 1, [&] { return at(m, {{"e", e}, {"a", a}}); });
            }
        }
    }
    return r;
}

inline check_result exponent_additivity(options const& o)
{
    check_result r{"exponent_additivity"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (nat a : regulars(ctx))
            for (std::int64_t i = -20; i <= 20; i += 3)
                for (std::int64_t j = -20; j <= 20; j += 4)
                    r.expect(signed_pow(a, i + j, ctx) ==
                                 ctx.mul(signed_pow(a, i, ctx), signed_pow(a, j, ctx)),
                             [&] { return at(m, {{"a", a}}) + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j); });
    }
    return r;
}

inline check_result orbit_structure(options const& o)
{
    check_result r{"orbit_structure"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (auto const& [e, members] : regular_classes(ctx)) {
            for (nat b : members) {
                nat const ob = order(b, ctx).ord;
                auto orb_b = orbit(b, ctx).elements;
                std::set<nat> sb(orb_b.begin(), orb_b.end());
                for (nat c : members) {
                    auto orb_c = orbit(c, ctx).elements;
                    std::set<nat> sc(orb_c.begin(), orb_c.end());
                    nat const dd = d_gcd(b, c, ctx);
                    r.expect(ob % dd == 0, [&] { return at(m, {{"b", b}, {"c", c}}); });
                    for (nat k = 1; k <= 2 * ob; ++k)
                        r.expect((sc.count(ctx.pow(b, k)) == 1) == (k % dd == 0),
                                 [&] { return at(m, {{"b", b}, {"c", c}, {"k", k}}); });
                    std::set<nat> literal;
                    for (nat x : sb)
                        if (sc.count(x))
                            literal.insert(x);
                    auto inter = orbit_intersection(b, c, ctx).elements;
                    std::set<nat> got(inter.begin(), inter.end());
                    r.expect(got == literal && inter.size() == ob / dd,
                             [&] { return at(m, {{"b", b}, {"c", c}}); });
                }
            }
        }
    }
    return r;
}

/// Every valid (a, b, c) where the class has at most 40 members, a seeded
/// sample of (b, c) pairs otherwise.
inline check_result witness_combination_sweep(options const& o)
{
    check_result r{"witness_combination"};
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (auto const& [e, members] : regular_classes(ctx)) {
            std::vector<std::pair<nat, nat>> pairs;
            if (members.size() <= 40) {
                for (nat b : members)
                    for (nat c : members)
                        pairs.emplace_back(b, c);
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
                for (int s = 0; s < 400; ++s)
                    pairs.emplace_back(members[pick(rng)], members[pick(rng)]);
            }
            for (auto [b, c] : pairs) {
                nat const want = lcm(order(b, ctx).ord, order(c, ctx).ord);
                for (nat a : orbit_intersection(b, c, ctx).elements) {
                    bool ok = false;
                    try {
                        auto w = combine_witnesses(a, b, c, ctx);
                        ok = order(w.d, ctx).ord == want && index_of(w.d, a, ctx).exists();
                    } catch (error const&) {
                        ok = false;
                    }
                    r.expect(ok, [&] { return at(m, {{"a", a}, {"b", b}, {"c", c}}); });
                }
            }
        }
    }
    return r;
}

inline check_result coprime_order_product(options const& o)
{
    check_result r{"coprime_order_product"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (auto const& [e, members] : regular_classes(ctx))
            for (nat a : members)
                for (nat b : members) {
                    nat const oa = order(a, ctx).ord, ob = order(b, ctx).ord;
                    if (gcd(oa, ob) != 1)
                        continue;
                    r.expect(order(ctx.mul(a, b), ctx).ord == oa * ob,
                             [&] { return at(m, {{"a", a}, {"b", b}}); });
                }
    }
    return r;
}

inline check_result index_and_omega(options const& o)
{
    check_result r{"index_and_omega"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        bool const cyclic = has_primitive_root(m);
        for (auto const& [e, members] : regular_classes(ctx)) {
            for (nat a : members) {
                nat const w = omega(a, ctx);
                r.expect(w % order(a, ctx).ord == 0, [&] { return at(m, {{"a", a}}); });
                if (cyclic && gcd(a, m) == 1)
                    r.expect(w == ctx.phi(), [&] { return at(m, {{"a", a}, {"omega", w}}); });
                for (nat b : members) {
                    auto ind = index_of(b, a, ctx);
                    if (!ind.exists())
                        continue;
                    nat const ob = order(b, ctx).ord;
                    r.expect(ob <= w, [&] { return at(m, {{"a", a}, {"b", b}}); });
                    for (nat k = 1; k <= o.max_k; ++k) {
                        bool const lhs = index_divisibility_check(b, a, k, ctx);
                        bool const rhs = ctx.in_idempotents(ctx.pow(a, ob / gcd(k, ob)));
                        r.expect(lhs == rhs, [&] { return at(m, {{"a", a}, {"b", b}, {"k", k}}); });
                    }
                }
            }
        }
    }
    return r;
}

inline check_result solvability_sweep(options const& o)
{
    check_result r{"solvability"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        bool const cyclic = has_primitive_root(m);
        for (nat a : regulars(ctx)) {
            nat const e = order(a, ctx).idem;
            for (nat k = 1; k <= o.max_k; ++k) {
                auto sols = solve_brute(a, k, ctx);
                bool const brute = !sols.empty();
                auto rep = solvable(a, k, ctx);
                r.expect(rep.verdict == brute, [&] { return at(m, {{"a", a}, {"k", k}}); });
                r.expect(!brute || necessary_condition(a, k, ctx),
                         [&] { return at(m, {{"a", a}, {"k", k}}); });
                r.expect(oracles::solvable_by_crt(a, k, m) == brute,
                         [&] { return at(m, {{"a", a}, {"k", k}}); });
                if (cyclic && gcd(a, m) == 1)
                    r.expect(classic_criterion(a, k, ctx) == rep.verdict,
                             [&] { return at(m, {{"a", a}, {"k", k}}); });
                if (brute) {
                    std::set<nat> s(sols.begin(), sols.end());
                    bool regular_one = false;
                    for (nat x : sols)
                        regular_one = regular_one || s.count(ctx.mul(x, e));
                    r.expect(regular_one, [&] { return at(m, {{"a", a}, {"k", k}}); });
                }
            }
        }
    }
    return r;
}

/// Independent tower evaluation: exact exponent while it fits in 63 bits,
/// otherwise the phi-shift b^E = b^(phi + E mod phi), valid for huge E.
inline nat tower_by_totient(nat base, nat height, nat m)
{
    if (m == 1)
        return 0;
    if (height == 0)
        return 1;
    nat const exponent = detail::saturated_tower(base, height - 1);
    if (exponent < nat_max)
        return pow_mod(base, exponent, m);
    nat const phi = oracles::totient_by_factorization(m);
    return pow_mod(base, tower_by_totient(base, height - 1, phi) + phi, m);
}

inline check_result tower_sweep(options const& o)
{
    check_result r{"tower"};
    for (nat m = 1; m <= o.max_m; ++m) {
        modulus_ctx ctx(m);
        for (nat base = 2; base <= 30; ++base)
            for (nat h = 0; h <= 4; ++h)
                r.expect(tower_mod({base, h, m}) == tower_by_totient(base, h, m),
                         [&] { return at(m, {{"base", base}, {"height", h}}); });
        for (nat a = 0; a < m; ++a) {
            auto p = order(a, ctx);
            for (nat q = 1; q <= 4; ++q)
                for (nat rem = 0; rem < p.ord; ++rem)
                    r.expect(ctx.pow(a, q * p.ord + rem) == ctx.mul(p.idem, ctx.pow(a, rem)),
                             [&] { return at(m, {{"a", a}, {"q", q}, {"r", rem}}); });
        }
    }
    return r;
}

inline check_result coprime_split_sweep(options const& o)
{
    check_result r{"coprime_split"};
    nat const top = std::max<nat>(o.max_m, 2) * 4;
    for (nat u = 1; u <= top; ++u)
        for (nat v = 1; v <= top; ++v) {
            nat const c = gcd(u, v);
            for (nat w = 1; w <= c; ++w) {
                if (c % w != 0)
                    continue;
                r.expect(satisfies_split_invariants(coprime_split(u, v, w), u, v, w),
                         [&] { return "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                                      " w=" + std::to_string(w); });
            }
        }
    return r;
}

using sweep_fn = check_result (*)(options const&);

inline std::vector<sweep_fn> all_sweeps()
{
    return {generalized_euler, idempotent_census,     order_structure,
            regularity_equivalence, regular_characterization, group_axioms,
            exponent_additivity, orbit_structure,      witness_combination_sweep,
            coprime_order_product, index_and_omega,    solvability_sweep,
            tower_sweep,           coprime_split_sweep};
}

/// Runs every sweep, one task each, and returns results in a fixed order.
inline std::vector<check_result> run_all(options const& o)
{
    std::vector<std::future<check_result>> pending;
    for (auto fn : all_sweeps())
        pending.push_back(std::async(std::launch::async, fn, std::cref(o)));
    std::vector<check_result> out;
    for (auto& f : pending)
        out.push_back(f.get());
    return out;
}

} // namespace gec::verify

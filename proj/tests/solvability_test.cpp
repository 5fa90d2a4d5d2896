#include <gtest/gtest.h>

#include <set>
#include <tuple>
#include <vector>

#include "brute.hpp"
#include "gec/classic.hpp"
#include "gec/oracles.hpp"
#include "gec/solvability.hpp"

using gec::modulus_ctx;
using gec::nat;

namespace {

std::vector<nat> brute_solutions(nat a, nat k, nat m)
{
    std::vector<nat> out;
    for (nat x = 0; x < m; ++x)
        if (brute::powm(x, k, m) == a % m)
            out.push_back(x);
    return out;
}

} // namespace

TEST(NecessaryCondition, Examples)
{
    EXPECT_TRUE(gec::necessary_condition(4, 2, modulus_ctx(12)));
    for (nat m : {12u, 36u, 100u}) {
        modulus_ctx ctx(m);
        for (nat e : ctx.idempotents())
            for (nat k = 1; k <= 6; ++k)
                EXPECT_TRUE(gec::necessary_condition(e, k, ctx));
    }
}

TEST(NecessaryCondition, PinnedFalseCasesAreUnsolvable)
{
    // found by sweeping regular a over m <= 50; includes moduli with square factors
    std::vector<std::tuple<nat, nat, nat>> cases{{5, 2, 2}, {4, 3, 2}, {18, 5, 2}, {20, 3, 4}, {28, 3, 3}, {44, 8, 4}};
    for (auto [m, a, k] : cases) {
        modulus_ctx ctx(m);
        EXPECT_FALSE(gec::necessary_condition(a, k, ctx)) << a << ' ' << k << ' ' << m;
        EXPECT_TRUE(brute_solutions(a, k, m).empty());
    }
}

TEST(NecessaryCondition, IsOnlyNecessary)
{
    // mod 15: phi = 8 yet omega(2) = 4, so the phi test passes while x^2 = 2 has no root
    modulus_ctx ctx(15);
    EXPECT_TRUE(gec::necessary_condition(2, 2, ctx));
    EXPECT_TRUE(brute_solutions(2, 2, 15).empty());
}

TEST(NecessaryCondition, RejectsNonRegularAndZeroK)
{
    EXPECT_THROW(gec::necessary_condition(2, 2, modulus_ctx(12)), gec::domain_error);
    EXPECT_THROW(gec::necessary_condition(1, 0, modulus_ctx(12)), gec::domain_error);
}

TEST(Solvable, Examples)
{
    modulus_ctx ctx(15);
    auto yes = gec::solvable(4, 2, ctx);
    EXPECT_TRUE(yes.verdict);
    EXPECT_EQ(yes.method, gec::solve_method::criterion);
    EXPECT_EQ(yes.omega_used, std::optional<nat>{4});
    EXPECT_EQ(yes.criterion_power, std::optional<nat>{1});
    EXPECT_FALSE(yes.sample_solution.has_value());

    auto no = gec::solvable(2, 2, ctx);
    EXPECT_FALSE(no.verdict);
    EXPECT_EQ(no.omega_used, std::optional<nat>{4});
    EXPECT_EQ(no.criterion_power, std::optional<nat>{4});

    for (nat e : ctx.idempotents())
        for (nat k = 1; k <= 5; ++k)
            EXPECT_TRUE(gec::solvable(e, k, ctx).verdict);
}

TEST(Solvable, RejectsOutsideHypothesis)
{
    EXPECT_THROW(gec::solvable(2, 2, modulus_ctx(12)), gec::domain_error);
    EXPECT_THROW(gec::solvable(1, 0, modulus_ctx(12)), gec::domain_error);
}

TEST(SolveBrute, Examples)
{
    modulus_ctx ctx(15);
    EXPECT_EQ(gec::solve_brute(4, 2, ctx), (std::vector<nat>{2, 7, 8, 13}));
    EXPECT_TRUE(gec::solve_brute(2, 2, ctx).empty());
    for (nat a = 0; a < 15; ++a)
        EXPECT_EQ(gec::solve_brute(a, 1, ctx), std::vector<nat>{a});
    EXPECT_THROW(gec::solve_brute(1, 2, modulus_ctx(100, 50)), gec::scan_limit_error);
}

TEST(Solvable, CriterionMatchesBruteForceEverywhere)
{
    for (nat m = 1; m <= 120; ++m) {
        modulus_ctx ctx(m);
        for (nat a : gec::regulars(ctx)) {
            nat const e = gec::order(a, ctx).idem;
            for (nat k = 1; k <= 12; ++k) {
                auto sols = brute_solutions(a, k, m);
                auto rep = gec::solvable(a, k, ctx);
                ASSERT_EQ(rep.verdict, !sols.empty()) << "x^" << k << " = " << a << " mod " << m;
                ASSERT_EQ(rep.verdict, ctx.in_idempotents(*rep.criterion_power));
                if (!sols.empty()) {
                    ASSERT_TRUE(gec::necessary_condition(a, k, ctx));
                    std::set<nat> s(sols.begin(), sols.end());
                    bool regular_solution = false;
                    for (nat x : sols)
                        regular_solution = regular_solution || s.count(ctx.mul(x, e));
                    ASSERT_TRUE(regular_solution);
                }
            }
        }
    }
}

TEST(BruteReport, CarriesASolution)
{
    modulus_ctx ctx(15);
    auto rep = gec::brute_report(4, 2, ctx);
    EXPECT_TRUE(rep.verdict);
    ASSERT_TRUE(rep.sample_solution);
    EXPECT_EQ(gec::pow_mod(*rep.sample_solution, 2, 15), 4u);
    EXPECT_FALSE(gec::brute_report(2, 2, ctx).sample_solution);
    // brute force also answers for non-regular a
    EXPECT_TRUE(gec::brute_report(4, 2, modulus_ctx(8)).verdict);
}

TEST(HasPrimitiveRoot, Examples)
{
    EXPECT_TRUE(gec::has_primitive_root(10));
    EXPECT_FALSE(gec::has_primitive_root(12));
    EXPECT_TRUE(gec::has_primitive_root(343));
    EXPECT_TRUE(gec::has_primitive_root(1));
    EXPECT_TRUE(gec::has_primitive_root(4));
    EXPECT_FALSE(gec::has_primitive_root(8));
    EXPECT_FALSE(gec::has_primitive_root(15));
    EXPECT_TRUE(gec::has_primitive_root(2 * 81));
}

TEST(HasPrimitiveRoot, MatchesElementOfFullOrder)
{
    for (nat m = 1; m <= 300; ++m) {
        modulus_ctx ctx(m);
        bool full = false;
        for (nat g = 0; g < m && !full; ++g)
            full = gec::gcd(g, m) == 1 && gec::order(g, ctx).ord == ctx.phi();
        EXPECT_EQ(gec::has_primitive_root(m), full) << m;
    }
}

TEST(ClassicCriterion, Examples)
{
    EXPECT_TRUE(gec::classic_criterion(9, 2, modulus_ctx(10)));
    EXPECT_FALSE(gec::classic_criterion(2, 2, modulus_ctx(5)));
    for (nat k = 1; k <= 6; ++k)
        EXPECT_TRUE(gec::classic_criterion(1, k, modulus_ctx(27)));
    EXPECT_THROW(gec::classic_criterion(1, 2, modulus_ctx(12)), gec::domain_error);
    EXPECT_THROW(gec::classic_criterion(5, 2, modulus_ctx(10)), gec::domain_error);
}

TEST(ClassicCriterion, AgreesWithGeneralizedCriterion)
{
    for (nat m = 1; m <= 120; ++m) {
        if (!gec::has_primitive_root(m))
            continue;
        modulus_ctx ctx(m);
        for (nat a = 0; a < m; ++a) {
            if (gec::gcd(a, m) != 1)
                continue;
            for (nat k = 1; k <= 12; ++k)
                ASSERT_EQ(gec::classic_criterion(a, k, ctx), gec::solvable(a, k, ctx).verdict)
                    << a << ' ' << k << ' ' << m;
        }
    }
}

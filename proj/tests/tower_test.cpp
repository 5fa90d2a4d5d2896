#include <gtest/gtest.h>

#include <vector>

#include "brute.hpp"
#include "gec/oracles.hpp"
#include "gec/tower.hpp"

using gec::chain_level;
using gec::nat;
using gec::tower_query;

namespace {

// Tower value by exact exponent while it fits, else b^(phi + E mod phi).
nat tower_reference(nat base, nat height, nat m)
{
    if (m == 1)
        return 0;
    if (height == 0)
        return 1;
    // exact a_(h-1) while it stays below 2^40
    nat e = 1;
    bool exact = true;
    for (nat h = 0; h + 1 < height && exact; ++h) {
        nat next = 1;
        for (nat i = 0; i < e && exact; ++i) {
            next *= base;
            exact = next < (nat{1} << 40);
        }
        e = next;
    }
    if (exact)
        return gec::pow_mod(base, e, m);
    nat const phi = gec::oracles::totient_by_factorization(m);
    return gec::pow_mod(base, tower_reference(base, height - 1, phi) + phi, m);
}

} // namespace

TEST(DescentChain, Examples)
{
    EXPECT_EQ(gec::descent_chain(42, 100),
              (std::vector<chain_level>{{100, 20, 76}, {20, 4, 16}, {4, 2, 0}, {2, 1, 0}}));
    EXPECT_EQ(gec::descent_chain(2, 2), (std::vector<chain_level>{{2, 1, 0}}));
    EXPECT_EQ(gec::descent_chain(7, 1), (std::vector<chain_level>{{1, 1, 0}}));
}

TEST(DescentChain, StrictlyDecreasing)
{
    for (nat base = 2; base <= 30; ++base)
        for (nat m = 1; m <= 300; ++m) {
            auto chain = gec::descent_chain(base, m);
            ASSERT_FALSE(chain.empty());
            EXPECT_EQ(chain.front().modulus, m);
            for (std::size_t i = 1; i < chain.size(); ++i) {
                EXPECT_LT(chain[i].modulus, chain[i - 1].modulus);
                EXPECT_EQ(chain[i].modulus, chain[i - 1].order);
            }
            EXPECT_TRUE(chain.back().modulus == 1 || chain.back().order == 1);
        }
}

TEST(TowerMod, ProblemFixture)
{
    EXPECT_EQ(gec::tower_mod({42, 100, 100}), 56u);
    EXPECT_EQ(gec::tower_mod({42, 100, 20}), 16u);
    // tall enough towers of 42 all agree modulo 100
    for (nat h = 4; h <= 200; ++h)
        EXPECT_EQ(gec::tower_mod({42, h, 100}), 56u) << h;
}

TEST(TowerMod, ShortTowers)
{
    for (nat b = 2; b <= 40; ++b)
        for (nat m = 1; m <= 60; ++m) {
            EXPECT_EQ(gec::tower_mod({b, 0, m}), 1 % m);
            EXPECT_EQ(gec::tower_mod({b, 1, m}), b % m);
            EXPECT_EQ(gec::tower_mod({b, 2, m}), brute::powm(b, b, m));
        }
    // 2^2^2^2 = 65536
    EXPECT_EQ(gec::tower_mod({2, 4, 1000000}), 65536u);
    EXPECT_EQ(gec::tower_mod({3, 3, 999983}), 7625597484987ull % 999983);
}

TEST(TowerMod, MatchesTotientReference)
{
    for (nat base = 2; base <= 30; ++base)
        for (nat m = 1; m <= 200; ++m)
            for (nat h = 0; h <= 4; ++h)
                ASSERT_EQ(gec::tower_mod({base, h, m}), tower_reference(base, h, m))
                    << base << '^' << h << " mod " << m;
}

TEST(TowerMod, HugeHeight)
{
    EXPECT_EQ(gec::tower_mod({42, gec::nat_max, 100}), 56u);
    EXPECT_EQ(gec::tower_mod({2, gec::nat_max, 1}), 0u);
}

TEST(TowerMod, RejectsBadQueries)
{
    EXPECT_THROW(gec::tower_mod({1, 5, 10}), gec::domain_error);
    EXPECT_THROW(gec::tower_mod({2, 5, 0}), gec::domain_error);
    EXPECT_THROW(gec::tower_mod({2, 5, 5000}, 1000), gec::scan_limit_error);
}

TEST(IdempotentAbsorption, HoldsForEveryResidue)
{
    for (nat m = 1; m <= 100; ++m) {
        gec::modulus_ctx ctx(m);
        for (nat a = 0; a < m; ++a) {
            auto p = gec::order(a, ctx);
            for (nat q = 1; q <= 4; ++q)
                for (nat r = 0; r < p.ord; ++r)
                    ASSERT_EQ(brute::powm(a, q * p.ord + r, m), brute::mulm(p.idem, brute::powm(a, r, m), m))
                        << a << " mod " << m;
        }
    }
}

#pragma once

// Definitional reference computations for the unit tests. Each one uses
// naive repeated multiplication and plain containers, sharing no code
// path with the library beyond the nat alias.

#include <cstdint>
#include <set>
#include <vector>

#include "gec/core_arith.hpp"

namespace brute {

using gec::nat;

inline nat mulm(nat a, nat b, nat m)
{
    return static_cast<nat>(static_cast<unsigned __int128>(a) * b % m);
}

inline nat powm(nat a, nat n, nat m)
{
    nat r = 1 % m;
    for (nat i = 0; i < n; ++i)
        r = mulm(r, a % m, m);
    return r;
}

inline nat gcd(nat a, nat b)
{
    for (nat d = a > b ? a : b; d >= 1; --d)
        if (a % d == 0 && b % d == 0)
            return d;
    return 0;
}

inline std::set<nat> idempotents(nat m)
{
    std::set<nat> out;
    for (nat e = 0; e < m; ++e)
        if (mulm(e, e, m) == e)
            out.insert(e);
    return out;
}

inline nat order(nat a, nat m)
{
    auto es = idempotents(m);
    for (nat n = 1;; ++n)
        if (es.count(powm(a, n, m)))
            return n;
}

inline bool regular(nat a, nat m)
{
    return powm(a, order(a, m) + 1, m) == a % m;
}

inline std::set<nat> orbit(nat a, nat m)
{
    std::set<nat> out;
    nat n = order(a, m);
    for (nat i = 1; i <= n; ++i)
        out.insert(powm(a, i, m));
    return out;
}

inline std::vector<nat> divisors(nat n)
{
    std::vector<nat> out;
    for (nat d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

/// Order, idempotent, regularity and orbit of every residue of one modulus.
struct table {
    nat m;
    std::vector<nat> ord;
    std::vector<nat> idem;
    std::vector<bool> regular;
    std::vector<std::set<nat>> orb;
};

inline table tabulate(nat m)
{
    table t{m, {}, {}, {}, {}};
    for (nat a = 0; a < m; ++a) {
        t.ord.push_back(order(a, m));
        t.idem.push_back(powm(a, t.ord.back(), m));
        t.regular.push_back(mulm(t.idem.back(), a, m) == a);
        t.orb.push_back(orbit(a, m));
    }
    return t;
}

} // namespace brute

// Last digits of b^b^...^b, with the modulus chain used to get there.
//   last_digits <base> <height> [m]

#include <cstdlib>
#include <iostream>

#include "gec/tower.hpp"

int main(int argc, char** argv)
{
    if (argc < 3 || argc > 4) {
        std::cerr << "usage: last_digits <base> <height> [m]\n";
        return 2;
    }
    gec::tower_query q{std::strtoull(argv[1], nullptr, 10), std::strtoull(argv[2], nullptr, 10),
                       argc == 4 ? std::strtoull(argv[3], nullptr, 10) : 100};
    try {
        for (auto const& lv : gec::descent_chain(q.base, q.modulus))
            std::cout << "mod " << lv.modulus << ": order " << lv.order << ", idempotent " << lv.idem << '\n';
        std::cout << gec::tower_mod(q) << '\n';
    } catch (gec::error const& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}

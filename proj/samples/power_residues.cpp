// Prints, for one modulus, which regular residues are k-th powers.
//   power_residues <m> <k>

#include <cstdlib>
#include <iostream>

#include "gec/residue_struct.hpp"
#include "gec/solvability.hpp"

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: power_residues <m> <k>\n";
        return 2;
    }
    gec::nat const m = std::strtoull(argv[1], nullptr, 10);
    gec::nat const k = std::strtoull(argv[2], nullptr, 10);
    try {
        gec::modulus_ctx ctx(m);
        for (gec::nat e : gec::idempotents(ctx)) {
            std::cout << "class " << e << ":";
            for (gec::nat a : gec::regulars(ctx, e)) {
                auto rep = gec::solvable(a, k, ctx);
                if (rep.verdict)
                    std::cout << ' ' << a;
            }
            std::cout << '\n';
        }
    } catch (gec::error const& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}

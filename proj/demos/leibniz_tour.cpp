// A short tour: canonical forms, identity testing, image classification and
// preimage synthesis on the null-filiform algebras.

#include <iostream>

#include "nullfil/nullfil.hpp"

using namespace nullfil;

int main() {
    RationalDomain q;
    AlgebraHandle L4 = AlgebraHandle::finite(4);

    std::cout << "Working in " << L4.str() << ": e_i e_1 = e_{i+1}, all other products zero.\n\n";

    // Every free polynomial has a canonical residue modulo the identities.
    auto f = parse_polynomial("x1 (x2 x3) + 2 x3 x2 x1 - x3 x1 x2", q);
    std::cout << "f            = " << f.str() << "\n";
    std::cout << "canonical(f) = " << normal_form(f, L4).str() << "\n\n";

    // The commutator has image L^3 on L_4; targets come with witnesses.
    auto comm = parse_polynomial("x1 x2 - x2 x1", q);
    std::cout << "image(x1 x2 - x2 x1) on L_4: " << classify(comm, L4).str() << "\n";
    auto target = parse_element("5*e3 - 1/2*e4", q, L4);
    auto result = preimage(comm, L4, target);
    if (auto* a = std::get_if<PreimageAssignment<Rational>>(&result)) {
        std::cout << "a preimage of " << target.str() << ":\n";
        for (const auto& [k, v] : a->assignment)
            std::cout << "  x" << k << " = " << v.str() << "\n";
    }

    // Squares are not a subspace: the image of x1^2 is a punctured cone.
    auto square = parse_polynomial("x1^2", q);
    std::cout << "\nimage(x1^2) on L_4: " << classify(square, L4).str() << "\n";
    auto needs = preimage(square, L4, parse_element("3*e2", q, L4));
    if (auto* nr = std::get_if<PreimageNeedsRoot<Rational>>(&needs))
        std::cout << "3*e2 needs a " << nr->exponent << "-th root of " << nr->value.str()
                  << " (no rational witness)\n";

    // Counting: the relatively free algebra of L_4 in 2 variables.
    std::cout << "\ndim of the relatively free algebra, n = 4, m = 2: "
              << dim_relatively_free(4, 2).str() << "\n";
    for (const auto& [s, words] : basis_monomials(4, 2).by_degree)
        std::cout << "  degree " << s << ": " << words.size() << " canonical words\n";
    return 0;
}

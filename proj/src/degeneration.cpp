#include "stmlab/degeneration.hpp"

#include "stmlab/errors.hpp"

namespace stm {

std::set<Monomial, TermOrderGreater> straight_lms(const SectionSpace& space) {
    std::set<Monomial, TermOrderGreater> out;
    for (const auto& p : space.straight_polys) {
        auto [it, inserted] = out.insert(p.leading_monomial());
        if (!inserted)
            throw TheoremViolation("straight_lms: leading-monomial collision at " + it->str());
    }
    return out;
}

InitialPiece initial_piece(const BlockShape& shape, int p) {
    if (p < 1) throw std::invalid_argument("initial_piece: power must be positive");
    InitialPiece out;
    out.p = p;
    const SectionSpace space = SectionSpace::build(shape.scaled(p));
    out.lm_set = space.echelon.pivots();
    out.dim = space.dim;
    return out;
}

SagbiReport sagbi_degree_check(const BlockShape& shape, int p) {
    if (p < 2) throw std::invalid_argument("sagbi_degree_check: power must be at least 2");
    SagbiReport rep;
    rep.p = p;

    const SectionSpace deg1 = SectionSpace::build(shape);
    const auto lm1 = straight_lms(deg1);
    rep.dim_1 = deg1.dim;

    const SectionSpace degp = SectionSpace::build(shape.scaled(p));
    const auto pivots_p = degp.echelon.pivots();
    rep.dim_p = degp.dim;
    rep.pivots_equal_straight_lms = (pivots_p == straight_lms(degp));
    rep.hilbert_match = (static_cast<int>(pivots_p.size()) == degp.dim);

    // p-fold products of degree-1 leading monomials.
    std::set<Monomial, TermOrderGreater> products;
    for (const Monomial& m : lm1) products.insert(m);
    for (int k = 1; k < p; ++k) {
        std::set<Monomial, TermOrderGreater> next;
        for (const Monomial& a : products)
            for (const Monomial& b : lm1) next.insert(a.times(b));
        products = std::move(next);
    }
    rep.contained_in_products = true;
    for (const Monomial& m : pivots_p)
        if (!products.contains(m)) {
            rep.contained_in_products = false;
            rep.offending.push_back(m);
        }
    rep.pass = rep.pivots_equal_straight_lms && rep.contained_in_products && rep.hilbert_match;
    return rep;
}

} // namespace stm

#pragma once

#include <set>
#include <vector>

#include "stmlab/sections.hpp"

namespace stm {

// Leading monomials of the straight basis; pairwise distinctness is a
// structural claim and any collision throws TheoremViolation.
std::set<Monomial, TermOrderGreater> straight_lms(const SectionSpace& space);

// Pivot-monomial set of the degree-p graded piece (built from the full
// generator list of the scaled shape, never from straight tableaux alone).
struct InitialPiece {
    int p = 1;
    std::set<Monomial, TermOrderGreater> lm_set;
    int dim = 0; // = |lm_set| = dim of the graded piece
};

InitialPiece initial_piece(const BlockShape& shape, int p);

// Degree-wise initial-algebra checks at power p:
//  - pivots(p) equal the straight leading monomials of the scaled shape,
//  - every pivot at power p is a product of p degree-1 pivots,
//  - the Hilbert values match (|pivots(p)| = dim of the degree-p piece).
struct SagbiReport {
    int p = 2;
    int dim_1 = 0;
    int dim_p = 0;
    bool pivots_equal_straight_lms = false;
    bool contained_in_products = false;
    bool hilbert_match = false;
    bool pass = false;
    std::vector<Monomial> offending; // pivots outside the product semigroup
};

SagbiReport sagbi_degree_check(const BlockShape& shape, int p);

} // namespace stm

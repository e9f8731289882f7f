#pragma once

#include "stmlab/sections.hpp"

namespace stm {

// The last n-1 entries of m; entry t pairs with the letter n-t of the tail
// of the longest word, i.e. a minor block of size n-t.
std::vector<int> m_zero(const std::vector<int>& m, int n);

// Per-degree flag multiplicities of the Richardson coordinate ring induced
// by m: degree d receives the multiplicity of the tail letter of value d.
std::vector<int> fiber_flag_mult(const std::vector<int>& m, int n);

// Lift of a flag standard monomial into the degree-p piece of the section
// ring of (j, m): the leading blocks are filled with p*m_r copies of the
// bottom-justified rowset {1..|K^(r)|}, the last n-1 blocks carry the flag
// monomial's rowsets.
Tableau varphi_j(const FlagMonomial& T, const Shape& j_shape, int p = 1);

// The opposite-side lift: the involution applied to the k-side varphi_j.
Tableau varphi_k(const FlagMonomial& T, const Shape& k_shape, int p = 1);

// Product of two tableaux over the same word and side (multiplicities add).
Tableau tableau_product(const Tableau& a, const Tableau& b);

struct CoproductOptions {
    bool stability = true; // augment with degree-2 ring generators (p >= 2)
    bool toric = true;     // leading-monomial shadow of the whole computation
};

struct CoproductPiece {
    int p = 0;
    long long numerator = 0;  // sum over q of dim R_q * dim S_{p-q}
    int relation_count = 0;
    int relation_rank = 0;
    int dim = 0;              // numerator - relation_rank
    int dim_A1 = 0;
    int phi_j_rank = 0;       // = dim_A1 when the lift is injective
    int phi_k_rank = 0;
    std::vector<int> dims_R;  // dim R_q, q = 0..p
    std::vector<int> dims_S;  // dim S_q, q = 0..p
    bool stability_checked = false;
    int dim_A2 = 0;
    int augmented_rank = 0;
    bool stability_pass = true;
    bool toric_checked = false;
    long long toric_numerator = 0;
    int toric_rank = 0;
    int toric_dim = 0;
    int toric_missing = 0;    // product monomials outside the pivot basis (finding)
    bool toric_equal = false;
};

// Graded piece of total degree p of the coproduct of the two section rings
// over the Richardson coordinate ring of (w, v) = (w_j, w_0 * w_k).
CoproductPiece coproduct_piece(const Shape& j_shape, const Shape& k_shape, int p,
                               const CoproductOptions& opt = {});

} // namespace stm

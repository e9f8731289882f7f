#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stmlab/linalg.hpp"
#include "stmlab/tableaux.hpp"

namespace stm {

// Polynomial realization of a tableau: the product of its minors,
// restricted to the triangular group named by the shape's side.
Polynomial tableau_poly(const Tableau& t);

// A graded piece of a section ring: generators, straight basis, exact
// dimension, and whether the basis theorem holds on this instance.
struct SectionSpace {
    std::shared_ptr<const BlockShape> shape;
    long long ordered_count = 0;           // with within-block orderings counted
    std::vector<Tableau> generators;       // one per row multiset
    std::vector<Polynomial> generator_polys;
    std::vector<Tableau> straight;
    std::vector<Polynomial> straight_polys;
    EchelonBasis echelon;                  // of the generator span
    int dim = 0;
    bool basis_ok = false;                 // dim == |straight|

    static SectionSpace build(const BlockShape& shape);
};

// Restriction on tableaux: replace the column sets of the full word by
// those of the subword j, dropping rows in omitted blocks; nullopt marks
// the zero image (some kept rowset not dominated by the new column set).
std::optional<Tableau> phi(const Tableau& t, const Word& j);

struct KernelCondition {
    int r = 0;           // 1-based word position with j_r != 0
    IndexSet full_cols;  // K^(r) of the full word
    IndexSet sub_cols;   // K_j^(r)
    bool is_void = false; // no admissible rowset can violate the condition
};

// Certificate for the restriction along a subword j.  The linear algebra is
// run at the multiplicities meff (the input m with entries zeroed on omitted
// letters); the kernel conditions depend only on j.
struct RestrictionCertificate {
    std::vector<int> meff;
    int dim_full = 0;          // dim of the full-word space at meff
    int straight_full = 0;
    int dim_sub = 0;           // dim of the subword space at meff
    int straight_sub = 0;
    int kernel_dim = 0;        // dim_full - dim_sub
    int flagged_count = 0;     // generators with zero restriction image
    int flagged_rank = 0;      // rank of their polynomial span (reported finding)
    int straight_with_condition = 0; // straight full-word tableaux with nonzero image
    std::vector<KernelCondition> conditions;
    bool pass = false;         // basis theorems on both sides + rank-nullity
};

RestrictionCertificate restriction_certificate(const Word& j, const std::vector<int>& m);

// A product of flag minors (columns 1..d), one factor list per degree d.
struct FlagMonomial {
    int n = 0;
    std::vector<std::vector<IndexSet>> rows; // rows[d-1]: sorted multiset of d-subsets

    bool operator==(const FlagMonomial&) const = default;
};

// All row-multiset products for the given per-degree multiplicities.
std::vector<FlagMonomial> flag_monomials(int n, const std::vector<int>& mult);

Polynomial flag_poly(const FlagMonomial& f);
mpz_class flag_eval(const FlagMonomial& f, const ExactMatrix& X); // integer samples

// Standard-monomial identification: columns sorted by decreasing length
// (ties in lexicographic order) must be weakly increasing left to right.
bool is_semistandard(const FlagMonomial& f);

bool schubert_ok(const Permutation& w, const FlagMonomial& f);
bool sandwich_ok(const Permutation& w, const Permutation& v, const FlagMonomial& f);

// Standard monomials (semistandard representatives) passing the dominance
// or sandwich filters.
std::vector<FlagMonomial> schubert_monomials(const Permutation& w, const std::vector<int>& mult);
std::vector<FlagMonomial> richardson_monomials(const Permutation& w, const Permutation& v,
                                               const std::vector<int>& mult);

struct SamplePlan {
    std::uint64_t seed = 2026;
    int margin = 25; // samples = span size + margin
    int bound = 50;  // entries uniform in [-bound, bound]
};

// U * P_w with U random upper unitriangular; the opposite variant uses a
// lower unitriangular factor.
ExactMatrix sample_schubert_matrix(const Permutation& w, std::mt19937_64& rng, int bound);
ExactMatrix sample_opposite_matrix(const Permutation& v, std::mt19937_64& rng, int bound);

// Rank of the evaluation of all flag monomials at random points of the
// (opposite) Schubert cell; throws UnstableSample if doubling the sample
// count changes the rank.
int schubert_dim_oracle(const Permutation& w, const std::vector<int>& mult, const SamplePlan& plan);

// rank(E_w) + rank(E_v) - rank([E_w; E_v]) over the flag-monomial span;
// zero when v is not Bruhat-below w.
int richardson_dim_oracle(const Permutation& w, const Permutation& v,
                          const std::vector<int>& mult, const SamplePlan& plan);

// Coordinates of a tableau over the straight basis of its shape; a target
// outside the span contradicts the basis theorem.
std::vector<mpq_class> straighten(const Tableau& t, const SectionSpace& space);

} // namespace stm

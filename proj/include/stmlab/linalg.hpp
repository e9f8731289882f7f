#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "stmlab/poly.hpp"

namespace stm {

// Row-echelon basis of a span of polynomials: integer rows with content 1,
// positive leading coefficients, pairwise distinct leading monomials, kept
// in strictly decreasing leading-monomial order.
struct EchelonBasis {
    std::vector<Polynomial> rows;
    int rank() const { return static_cast<int>(rows.size()); }
    std::set<Monomial, TermOrderGreater> pivots() const;
};

// Divide out the integer content and make the leading coefficient positive.
void make_primitive(Polynomial& p);

// Exact elimination over the span of the inputs.  Pivots are chosen at the
// term-order-largest remaining leading monomial; all rows sharing that
// leading monomial are reduced against the pivot by integer
// cross-multiplication.  The parallel kernel distributes those independent
// row updates over OpenMP threads and returns bit-identical output for any
// thread count; the serial variant is the reference implementation.
EchelonBasis echelonize(const std::vector<Polynomial>& gens);
EchelonBasis echelonize_serial(const std::vector<Polynomial>& gens);

int rank_of_span(const std::vector<Polynomial>& ps);
std::set<Monomial, TermOrderGreater> pivot_monomials(const std::vector<Polynomial>& ps);

// Solves target = sum c_i * basis_i for a fixed linearly independent basis;
// the echelonized basis with coordinate bookkeeping is prepared once.
class BasisSolver {
public:
    explicit BasisSolver(const std::vector<Polynomial>& basis);
    // nullopt when the target is outside the span.
    std::optional<std::vector<mpq_class>> solve(const Polynomial& target) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Coefficients c with target = sum c_i * basis_i, or nullopt when the
// target is outside the span.  The basis must be linearly independent.
std::optional<std::vector<mpq_class>> express_in_basis(const Polynomial& target,
                                                       const std::vector<Polynomial>& basis);

// Rank of a matrix of rationals by exact Gaussian elimination.
int matrix_rank(ExactMatrix M);

} // namespace stm

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "stmlab/weyl.hpp"

namespace stm {

// Variable x[r,c] of the generic n x n matrix, packed as (r<<8)|c.
// Smaller id = higher precedence: x[1,1] > x[1,2] > ... > x[n,n] (row-major).
using VarId = std::uint16_t;
inline VarId var_id(int r, int c) { return static_cast<VarId>((r << 8) | c); }
inline int var_row(VarId v) { return v >> 8; }
inline int var_col(VarId v) { return v & 0xff; }
std::string var_str(VarId v); // "x[1,2]"

// Power product of the x[r,c]; exponents positive, factors sorted by
// variable precedence.  Compared lexicographically in that precedence
// (the fixed diagonal term order of the workbench).
class Monomial {
public:
    Monomial() = default; // the monomial 1

    Monomial times(const Monomial& o) const;
    Monomial times_var(int r, int c, int e = 1) const;
    int degree() const;
    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<VarId, int>>& factors() const { return e_; }

    // +1 if a is larger than b in the term order, 0 if equal, -1 otherwise.
    static int cmp(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

    std::string str() const; // "x[1,1]^2*x[2,3]", "1" for the empty product

private:
    std::vector<std::pair<VarId, int>> e_;
};

// Comparator putting the term-order-largest monomial first.
struct TermOrderGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// Matrix of arbitrary-precision rationals (0-based indexing).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    int rows() const { return r_; }
    int cols() const { return c_; }
    mpq_class& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

private:
    int r_ = 0, c_ = 0;
    std::vector<mpq_class> a_;
};

// Multivariate polynomial with arbitrary-precision integer coefficients;
// terms kept sorted with the leading monomial first.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, TermOrderGreater>;

    Polynomial() = default; // zero
    static Polynomial constant(const mpz_class& c);
    static Polynomial variable(int r, int c);

    bool is_zero() const { return t_.empty(); }
    int term_count() const { return static_cast<int>(t_.size()); }
    int degree() const; // max total degree; -1 for zero
    const TermMap& terms() const { return t_; }

    void add_term(const Monomial& m, const mpz_class& c); // accumulates, drops zeros

    Polynomial plus(const Polynomial& o) const;
    Polynomial minus(const Polynomial& o) const;
    Polynomial times(const Polynomial& o) const;
    Polynomial times(const mpz_class& c) const;
    Polynomial negated() const;

    // Largest monomial with its coefficient; throws std::domain_error on zero.
    std::pair<Monomial, mpz_class> leading_term() const;
    Monomial leading_monomial() const { return leading_term().first; }

    mpq_class evaluate(const ExactMatrix& X) const;

    bool operator==(const Polynomial&) const = default;

    // "+c*x[..]*... - c*x[..]" with terms in term order, largest first.
    std::string str() const;

private:
    TermMap t_;
};

// a*p + b*q in a single merge pass.
Polynomial lin_comb(const mpz_class& a, const Polynomial& p, const mpz_class& b, const Polynomial& q);

// Which closed subvariety of matrices the polynomial model lives on:
// the full matrix space, the upper-triangular (Borel) group, or the
// lower-triangular group.  Restriction kills every term containing a
// variable that vanishes on the subgroup.
enum class Restriction { none, upper, lower };

// Signed minor determinant on rows R, columns C.  With a restriction the
// expansion drops the terms that vanish on the triangular subgroup.
Polynomial minor_poly(const IndexSet& R, const IndexSet& C, Restriction rest = Restriction::none);

Polynomial restrict_to(const Polynomial& p, Restriction rest);

} // namespace stm

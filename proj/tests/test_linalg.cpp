#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>

#include "stmlab/linalg.hpp"
#include "stmlab/sections.hpp"
#include "stmlab/tableaux.hpp"

using namespace stm;

namespace {

Polynomial rand_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> idx(1, 3), coef(-4, 4), nterms(1, 5);
    Polynomial p;
    const int T = nterms(rng);
    for (int t = 0; t < T; ++t) {
        Monomial m = Monomial().times_var(idx(rng), idx(rng)).times_var(idx(rng), idx(rng));
        p.add_term(m, coef(rng));
    }
    return p;
}

std::vector<Polynomial> generators_of(const char* word, const std::vector<int>& m, int n) {
    const Shape sh(Word::parse(word, n), m);
    auto bs = std::make_shared<const BlockShape>(BlockShape::of(sh));
    std::vector<Polynomial> gens;
    for (const auto& t : enumerate_tableaux_dedup(bs)) gens.push_back(tableau_poly(t));
    return gens;
}

} // namespace

TEST_CASE("make_primitive") {
    Polynomial p = Polynomial::variable(1, 1).times(mpz_class(-6))
                       .plus(Polynomial::variable(1, 2).times(mpz_class(4)));
    make_primitive(p);
    CHECK(p == Polynomial::variable(1, 1).times(mpz_class(3))
                   .minus(Polynomial::variable(1, 2).times(mpz_class(2))));
    Polynomial z;
    make_primitive(z);
    CHECK(z.is_zero());
}

TEST_CASE("echelon basics") {
    const Polynomial x = Polynomial::variable(1, 1), y = Polynomial::variable(1, 2);
    std::vector<Polynomial> gens = {x.plus(y), x.minus(y), x.plus(y), Polynomial()};
    const EchelonBasis b = echelonize(gens);
    CHECK(b.rank() == 2);
    CHECK(rank_of_span(gens) == 2);
    const auto piv = b.pivots();
    CHECK(piv.count(Monomial().times_var(1, 1)) == 1);
    CHECK(piv.count(Monomial().times_var(1, 2)) == 1);
    // echelon invariants: distinct, strictly decreasing leading monomials
    Monomial prev;
    bool first = true;
    for (const auto& r : b.rows) {
        CHECK_FALSE(r.is_zero());
        CHECK(r.leading_term().second > 0);
        if (!first) CHECK(Monomial::cmp(prev, r.leading_monomial()) > 0);
        prev = r.leading_monomial();
        first = false;
    }
    CHECK(rank_of_span({}) == 0);
}

TEST_CASE("rank is invariant under recombination") {
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 6; ++i) gens.push_back(rand_poly(rng));
        const int r = rank_of_span(gens);
        // add random integer combinations of existing rows
        std::vector<Polynomial> more = gens;
        std::uniform_int_distribution<int> pick(0, 5), coef(-3, 3);
        for (int i = 0; i < 4; ++i)
            more.push_back(lin_comb(coef(rng), gens[static_cast<size_t>(pick(rng))],
                                    coef(rng), gens[static_cast<size_t>(pick(rng))]));
        CHECK(rank_of_span(more) == r);
        CHECK(pivot_monomials(more) == pivot_monomials(gens));
    }
}

TEST_CASE("serial and parallel elimination agree bit for bit") {
    const auto gens = generators_of("1,2,1", {2, 2, 2}, 3);
    const EchelonBasis serial = echelonize_serial(gens);
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        const EchelonBasis par = echelonize(gens);
        CHECK(par.rows == serial.rows);
    }
    omp_set_num_threads(saved);
    CHECK(serial.rank() == 51);
}

TEST_CASE("express_in_basis and BasisSolver") {
    const Polynomial x = Polynomial::variable(1, 1), y = Polynomial::variable(1, 2),
                     z = Polynomial::variable(2, 2);
    const std::vector<Polynomial> basis = {x.plus(y), y.plus(z)};
    const BasisSolver solver(basis);
    auto c = solver.solve(x.minus(z));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == -1);
    CHECK_FALSE(solver.solve(z).has_value());
    // zero target
    auto c0 = solver.solve(Polynomial());
    REQUIRE(c0.has_value());
    CHECK((*c0)[0] == 0);
    CHECK((*c0)[1] == 0);
    // dependent basis is rejected
    CHECK_THROWS_AS(BasisSolver({x, x}), std::invalid_argument);
    // one-shot wrapper agrees
    CHECK(express_in_basis(x.minus(z), basis) == c);
    // reconstruction identity on a real section space
    const auto gens = generators_of("1,2,1", {1, 1, 1}, 3);
    const EchelonBasis eb = echelonize(gens);
    const BasisSolver s2(eb.rows);
    for (const auto& g : gens) {
        auto coords = s2.solve(g);
        REQUIRE(coords.has_value());
        // coordinates are rational; verify after clearing denominators
        mpz_class den = 1;
        for (const auto& q : *coords) den = lcm(den, q.get_den());
        Polynomial acc;
        for (size_t i = 0; i < coords->size(); ++i) {
            mpz_class c_i = (*coords)[i].get_num() * (den / (*coords)[i].get_den());
            acc = lin_comb(1, acc, c_i, eb.rows[i]);
        }
        CHECK(acc == g.times(den));
    }
}

TEST_CASE("matrix_rank") {
    ExactMatrix M(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M.at(i, j) = i * 3 + j + 1;
    CHECK(matrix_rank(M) == 2);
    ExactMatrix I(4, 4);
    for (int i = 0; i < 4; ++i) I.at(i, i) = mpq_class(1, i + 1);
    CHECK(matrix_rank(I) == 4);
    CHECK(matrix_rank(ExactMatrix(0, 5)) == 0);
    ExactMatrix Z(2, 3);
    CHECK(matrix_rank(Z) == 0);
}

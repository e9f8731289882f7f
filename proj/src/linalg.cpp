#include "stmlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stm {

std::set<Monomial, TermOrderGreater> EchelonBasis::pivots() const {
    std::set<Monomial, TermOrderGreater> out;
    for (const auto& r : rows) out.insert(r.leading_monomial());
    return out;
}

void make_primitive(Polynomial& p) {
    if (p.is_zero()) return;
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    const bool flip = p.leading_term().second < 0;
    if (flip) g = -g;
    if (g != 1) {
        Polynomial q;
        for (const auto& [m, c] : p.terms()) q.add_term(m, c / g);
        p = std::move(q);
    }
}

namespace {

EchelonBasis echelonize_impl(const std::vector<Polynomial>& gens, bool parallel) {
    std::vector<Polynomial> work;
    work.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial p = g;
        make_primitive(p);
        work.push_back(std::move(p));
    }
    EchelonBasis out;
    while (!work.empty()) {
        // Pivot at the largest remaining leading monomial (first occurrence).
        size_t pidx = 0;
        for (size_t i = 1; i < work.size(); ++i)
            if (Monomial::cmp(work[i].leading_monomial(), work[pidx].leading_monomial()) > 0)
                pidx = i;
        Polynomial piv = std::move(work[pidx]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pidx));
        const auto [plm, plc] = piv.leading_term();

        std::vector<size_t> hits;
        for (size_t i = 0; i < work.size(); ++i)
            if (work[i].leading_monomial() == plm) hits.push_back(i);

        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(hits.size()); ++k) {
                Polynomial& row = work[hits[static_cast<size_t>(k)]];
                row = lin_comb(plc, row, -row.leading_term().second, piv);
                make_primitive(row);
            }
        } else {
            for (size_t i : hits) {
                Polynomial& row = work[i];
                row = lin_comb(plc, row, -row.leading_term().second, piv);
                make_primitive(row);
            }
        }
        std::erase_if(work, [](const Polynomial& p) { return p.is_zero(); });
        out.rows.push_back(std::move(piv));
    }
    return out;
}

} // namespace

EchelonBasis echelonize(const std::vector<Polynomial>& gens) { return echelonize_impl(gens, true); }
EchelonBasis echelonize_serial(const std::vector<Polynomial>& gens) { return echelonize_impl(gens, false); }

int rank_of_span(const std::vector<Polynomial>& ps) { return echelonize(ps).rank(); }

std::set<Monomial, TermOrderGreater> pivot_monomials(const std::vector<Polynomial>& ps) {
    return echelonize(ps).pivots();
}

namespace {

// Polynomial with rational coefficients, used only inside express_in_basis.
using QPoly = std::map<Monomial, mpq_class, TermOrderGreater>;

QPoly to_qpoly(const Polynomial& p) {
    QPoly q;
    for (const auto& [m, c] : p.terms()) q.emplace(m, mpq_class(c));
    return q;
}

void q_axpy(QPoly& dst, const mpq_class& a, const QPoly& src) {
    for (const auto& [m, c] : src) {
        auto [it, inserted] = dst.try_emplace(m, a * c);
        if (!inserted) {
            it->second += a * c;
            if (it->second == 0) dst.erase(it);
        }
    }
}

} // namespace

struct BasisSolver::Impl {
    struct Row {
        QPoly p;                  // monic
        std::vector<mpq_class> c; // coordinates over the original basis
    };
    std::map<Monomial, Row, TermOrderGreater> ech;
    size_t nb = 0;
};

BasisSolver::BasisSolver(const std::vector<Polynomial>& basis) {
    auto impl = std::make_shared<Impl>();
    impl->nb = basis.size();
    for (size_t i = 0; i < impl->nb; ++i) {
        Impl::Row r;
        r.p = to_qpoly(basis[i]);
        r.c.assign(impl->nb, 0);
        r.c[i] = 1;
        while (!r.p.empty()) {
            auto it = impl->ech.find(r.p.begin()->first);
            if (it == impl->ech.end()) break;
            const mpq_class lc = r.p.begin()->second;
            q_axpy(r.p, -lc, it->second.p);
            for (size_t k = 0; k < impl->nb; ++k) r.c[k] -= lc * it->second.c[k];
        }
        if (r.p.empty())
            throw std::invalid_argument("BasisSolver: basis is linearly dependent");
        const mpq_class lc = r.p.begin()->second;
        for (auto& [m, c] : r.p) c /= lc;
        for (auto& c : r.c) c /= lc;
        impl->ech.emplace(r.p.begin()->first, std::move(r));
    }
    impl_ = std::move(impl);
}

std::optional<std::vector<mpq_class>> BasisSolver::solve(const Polynomial& target) const {
    QPoly t = to_qpoly(target);
    std::vector<mpq_class> coeffs(impl_->nb, 0);
    while (!t.empty()) {
        auto it = impl_->ech.find(t.begin()->first);
        if (it == impl_->ech.end()) return std::nullopt;
        const mpq_class lc = t.begin()->second;
        q_axpy(t, -lc, it->second.p);
        for (size_t k = 0; k < impl_->nb; ++k) coeffs[k] += lc * it->second.c[k];
    }
    return coeffs;
}

std::optional<std::vector<mpq_class>> express_in_basis(const Polynomial& target,
                                                       const std::vector<Polynomial>& basis) {
    return BasisSolver(basis).solve(target);
}

int matrix_rank(ExactMatrix M) {
    const int R = M.rows(), C = M.cols();
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int i = rank; i < R; ++i)
            if (M.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < C; ++j) std::swap(M.at(piv, j), M.at(rank, j));
        const mpq_class inv = 1 / M.at(rank, col);
        for (int j = col; j < C; ++j) M.at(rank, j) *= inv;
        for (int i = rank + 1; i < R; ++i) {
            if (M.at(i, col) == 0) continue;
            const mpq_class f = M.at(i, col);
            for (int j = col; j < C; ++j) M.at(i, j) -= f * M.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace stm

#include "stmlab/fiberprod.hpp"

#include <algorithm>
#include <map>

#include "stmlab/errors.hpp"

namespace stm {

std::vector<int> m_zero(const std::vector<int>& m, int n) {
    const int ell = n * (n - 1) / 2;
    if (static_cast<int>(m.size()) != ell)
        throw std::invalid_argument("m_zero: multiplicity vector has the wrong length");
    return std::vector<int>(m.end() - (n - 1), m.end());
}

std::vector<int> fiber_flag_mult(const std::vector<int>& m, int n) {
    const std::vector<int> m0 = m_zero(m, n);
    // m0 entry t (1-based) pairs with the tail letter n-t, a block of size
    // n-t, hence contributes in flag degree d = n-t.
    std::vector<int> fm(static_cast<size_t>(n - 1), 0);
    for (int t = 1; t <= n - 1; ++t) fm[static_cast<size_t>(n - t - 1)] = m0[static_cast<size_t>(t - 1)];
    return fm;
}

Tableau varphi_j(const FlagMonomial& T, const Shape& j_shape, int p) {
    const int n = j_shape.n();
    const int ell = j_shape.word.length();
    auto shape = std::make_shared<const BlockShape>(BlockShape::of(j_shape).scaled(p));
    Tableau out;
    out.shape = shape;
    std::vector<size_t> used(static_cast<size_t>(n), 0); // per flag degree
    for (int r = 0; r < ell; ++r) {
        const int mult = shape->mult[static_cast<size_t>(r)];
        if (mult == 0) continue;
        const IndexSet& K = shape->cols[static_cast<size_t>(r)];
        if (r < ell - (n - 1)) {
            const IndexSet R0 = IndexSet::range(K.size());
            for (int k = 0; k < mult; ++k) out.rows.emplace_back(r, R0);
        } else {
            const int d = K.size();
            const auto& block = T.rows[static_cast<size_t>(d - 1)];
            size_t& u = used[static_cast<size_t>(d)];
            if (block.size() < u + static_cast<size_t>(mult))
                throw std::invalid_argument("varphi_j: flag monomial degrees do not match the shape");
            for (int k = 0; k < mult; ++k) {
                const IndexSet& R = block[u++];
                if (!dominates(K, R))
                    throw TheoremViolation("varphi_j: flag rowset " + R.str() +
                                           " not dominated by the column set " + K.str());
                out.rows.emplace_back(r, R);
            }
        }
    }
    for (size_t d = 1; d < static_cast<size_t>(n); ++d)
        if (used[d] != T.rows[d - 1].size())
            throw std::invalid_argument("varphi_j: unused flag rowsets of degree " + std::to_string(d));
    return out;
}

Tableau varphi_k(const FlagMonomial& T, const Shape& k_shape, int p) {
    return involution(varphi_j(T, k_shape, p));
}

Tableau tableau_product(const Tableau& a, const Tableau& b) {
    const BlockShape& sa = *a.shape;
    const BlockShape& sb = *b.shape;
    if (sa.n != sb.n || sa.side != sb.side || !(sa.word == sb.word) || sa.cols != sb.cols)
        throw std::invalid_argument("tableau_product: incompatible shapes");
    BlockShape sum = sa;
    for (size_t r = 0; r < sum.mult.size(); ++r) sum.mult[r] += sb.mult[r];
    auto shape = std::make_shared<const BlockShape>(std::move(sum));
    std::vector<std::vector<IndexSet>> per_block(static_cast<size_t>(shape->length()));
    for (const auto& [pos, R] : a.rows) per_block[static_cast<size_t>(pos)].push_back(R);
    for (const auto& [pos, R] : b.rows) per_block[static_cast<size_t>(pos)].push_back(R);
    Tableau out;
    out.shape = shape;
    for (size_t r = 0; r < per_block.size(); ++r) {
        std::sort(per_block[r].begin(), per_block[r].end());
        for (IndexSet& R : per_block[r]) out.rows.emplace_back(static_cast<int>(r), std::move(R));
    }
    return out;
}

namespace {

// Dense relation-row assembly: rows are filled into an ExactMatrix.
struct PairIndexer {
    std::vector<int> dims_R, dims_S; // q = 0..p
    std::vector<long long> offset;   // block offsets by q
    long long total = 0;

    PairIndexer(std::vector<int> dR, std::vector<int> dS) : dims_R(std::move(dR)), dims_S(std::move(dS)) {
        const size_t blocks = dims_R.size();
        offset.assign(blocks, 0);
        for (size_t q = 0; q < blocks; ++q) {
            offset[q] = total;
            total += static_cast<long long>(dims_R[q]) * dims_S[blocks - 1 - q];
        }
    }
    long long at(int q, int i, int j) const {
        const size_t blocks = dims_R.size();
        return offset[static_cast<size_t>(q)] +
               static_cast<long long>(i) * dims_S[blocks - 1 - static_cast<size_t>(q)] + j;
    }
};

int rank_of_rows(const std::vector<std::vector<std::pair<long long, mpq_class>>>& rows, long long cols) {
    ExactMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) M.at(static_cast<int>(i), static_cast<int>(j)) = v;
    return matrix_rank(std::move(M));
}

} // namespace

CoproductPiece coproduct_piece(const Shape& j_shape, const Shape& k_shape, int p,
                               const CoproductOptions& opt) {
    if (p < 0) throw std::invalid_argument("coproduct_piece: p must be nonnegative");
    const int n = j_shape.n();
    if (k_shape.n() != n || k_shape.mult != j_shape.mult)
        throw std::invalid_argument("coproduct_piece: the two shapes must share n and m");
    const Permutation w = word_to_perm(j_shape.word);
    const Permutation v = compose(Permutation::order_reversing(n), word_to_perm(k_shape.word));
    if (!bruhat_leq(v, w))
        throw EmptyFiber("coproduct_piece: empty fiber, v = w_0*w_k is not Bruhat-below w_j");

    CoproductPiece out;
    out.p = p;

    const std::vector<int> fm1 = fiber_flag_mult(j_shape.mult, n);
    const auto A1 = richardson_monomials(w, v, fm1);
    out.dim_A1 = static_cast<int>(A1.size());

    // Graded pieces of both section rings, q = 0..p (plus q = p+... for the
    // stability lift handled below via the same vectors).
    std::vector<SectionSpace> R(static_cast<size_t>(p) + 1), S(static_cast<size_t>(p) + 1);
    std::vector<BasisSolver> solR, solS;
    for (int q = 0; q <= p; ++q) {
        R[static_cast<size_t>(q)] = SectionSpace::build(BlockShape::of(j_shape).scaled(q));
        S[static_cast<size_t>(q)] = SectionSpace::build(BlockShape::of(k_shape).scaled(q).opposite());
        solR.emplace_back(R[static_cast<size_t>(q)].straight_polys);
        solS.emplace_back(S[static_cast<size_t>(q)].straight_polys);
        out.dims_R.push_back(R[static_cast<size_t>(q)].dim);
        out.dims_S.push_back(S[static_cast<size_t>(q)].dim);
    }

    auto express = [](const BasisSolver& sol, const Tableau& t) {
        auto c = sol.solve(tableau_poly(t));
        if (!c) throw TheoremViolation("coproduct_piece: product outside the straight-basis span");
        return *c;
    };

    // Degree-1 lifts of the Richardson basis and their ranks.
    std::vector<Tableau> tJ, tK;
    std::vector<std::vector<mpq_class>> cJ, cK;
    for (const auto& a : A1) {
        tJ.push_back(varphi_j(a, j_shape, 1));
        tK.push_back(varphi_k(a, k_shape, 1));
        if (p >= 1) {
            cJ.push_back(express(solR[1], tJ.back()));
            cK.push_back(express(solS[1], tK.back()));
        }
    }
    if (p >= 1) {
        ExactMatrix MJ(out.dim_A1, out.dims_R[1]), MK(out.dim_A1, out.dims_S[1]);
        for (int a = 0; a < out.dim_A1; ++a) {
            for (int i = 0; i < out.dims_R[1]; ++i) MJ.at(a, i) = cJ[static_cast<size_t>(a)][static_cast<size_t>(i)];
            for (int i = 0; i < out.dims_S[1]; ++i) MK.at(a, i) = cK[static_cast<size_t>(a)][static_cast<size_t>(i)];
        }
        out.phi_j_rank = matrix_rank(std::move(MJ));
        out.phi_k_rank = matrix_rank(std::move(MK));
    }

    const PairIndexer idx(out.dims_R, out.dims_S);
    out.numerator = idx.total;
    if (p == 0) {
        out.dim = 1;
        return out;
    }

    // Relation rows (phi_j(a)*u) (x) v' - u (x) (phi_k(a)*v') for a in A_1.
    std::vector<std::vector<std::pair<long long, mpq_class>>> rows;
    for (int a = 0; a < out.dim_A1; ++a) {
        for (int q = 0; q + 1 <= p; ++q) {
            const auto& Rq = R[static_cast<size_t>(q)];
            const auto& Sq = S[static_cast<size_t>(p - 1 - q)];
            // Cache the straightened products per left / right factor.
            std::vector<std::vector<mpq_class>> alpha, beta;
            for (const auto& u : Rq.straight)
                alpha.push_back(express(solR[static_cast<size_t>(q) + 1],
                                        tableau_product(tJ[static_cast<size_t>(a)], u)));
            for (const auto& vp : Sq.straight)
                beta.push_back(express(solS[static_cast<size_t>(p - q)],
                                       tableau_product(tK[static_cast<size_t>(a)], vp)));
            for (int u = 0; u < static_cast<int>(Rq.straight.size()); ++u) {
                for (int vp = 0; vp < static_cast<int>(Sq.straight.size()); ++vp) {
                    std::vector<std::pair<long long, mpq_class>> row;
                    for (int i = 0; i < out.dims_R[static_cast<size_t>(q) + 1]; ++i) {
                        const mpq_class& c = alpha[static_cast<size_t>(u)][static_cast<size_t>(i)];
                        if (c != 0) row.emplace_back(idx.at(q + 1, i, vp), c);
                    }
                    for (int jj = 0; jj < out.dims_S[static_cast<size_t>(p - q)]; ++jj) {
                        const mpq_class& c = beta[static_cast<size_t>(vp)][static_cast<size_t>(jj)];
                        if (c != 0) row.emplace_back(idx.at(q, u, jj), -c);
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    out.relation_count = static_cast<int>(rows.size());
    out.relation_rank = rank_of_rows(rows, idx.total);
    out.dim = static_cast<int>(out.numerator - out.relation_rank);

    if (opt.stability && p >= 2) {
        out.stability_checked = true;
        const std::vector<int> fm2 = [&] {
            std::vector<int> f = fm1;
            for (int& x : f) x *= 2;
            return f;
        }();
        const auto A2 = richardson_monomials(w, v, fm2);
        out.dim_A2 = static_cast<int>(A2.size());
        std::vector<std::vector<std::pair<long long, mpq_class>>> aug = rows;
        for (const auto& a2 : A2) {
            const Tableau t2J = varphi_j(a2, j_shape, 2);
            const Tableau t2K = varphi_k(a2, k_shape, 2);
            for (int q = 0; q + 2 <= p; ++q) {
                const auto& Rq = R[static_cast<size_t>(q)];
                const auto& Sq = S[static_cast<size_t>(p - 2 - q)];
                std::vector<std::vector<mpq_class>> alpha, beta;
                for (const auto& u : Rq.straight)
                    alpha.push_back(express(solR[static_cast<size_t>(q) + 2], tableau_product(t2J, u)));
                for (const auto& vp : Sq.straight)
                    beta.push_back(express(solS[static_cast<size_t>(p - q)], tableau_product(t2K, vp)));
                for (int u = 0; u < static_cast<int>(Rq.straight.size()); ++u) {
                    for (int vp = 0; vp < static_cast<int>(Sq.straight.size()); ++vp) {
                        std::vector<std::pair<long long, mpq_class>> row;
                        for (int i = 0; i < out.dims_R[static_cast<size_t>(q) + 2]; ++i) {
                            const mpq_class& c = alpha[static_cast<size_t>(u)][static_cast<size_t>(i)];
                            if (c != 0) row.emplace_back(idx.at(q + 2, i, vp), c);
                        }
                        for (int jj = 0; jj < out.dims_S[static_cast<size_t>(p - q)]; ++jj) {
                            const mpq_class& c = beta[static_cast<size_t>(vp)][static_cast<size_t>(jj)];
                            if (c != 0) row.emplace_back(idx.at(q, u, jj), -c);
                        }
                        aug.push_back(std::move(row));
                    }
                }
            }
        }
        out.augmented_rank = rank_of_rows(aug, idx.total);
        out.stability_pass = (out.augmented_rank == out.relation_rank);
    }

    if (opt.toric) {
        out.toric_checked = true;
        // Leading-monomial shadow: bases become the pivot-monomial sets, the
        // maps become multiplication by the leading monomials of the lifts.
        std::vector<std::vector<Monomial>> Rlm(static_cast<size_t>(p) + 1), Slm(static_cast<size_t>(p) + 1);
        auto index_of = [](const std::vector<Monomial>& basis, const Monomial& m) {
            for (size_t k = 0; k < basis.size(); ++k)
                if (basis[k] == m) return static_cast<int>(k);
            return -1;
        };
        for (int q = 0; q <= p; ++q) {
            for (const auto& m : R[static_cast<size_t>(q)].echelon.pivots()) Rlm[static_cast<size_t>(q)].push_back(m);
            for (const auto& m : S[static_cast<size_t>(q)].echelon.pivots()) Slm[static_cast<size_t>(q)].push_back(m);
        }
        std::vector<std::vector<std::pair<long long, mpq_class>>> trows;
        for (int a = 0; a < out.dim_A1; ++a) {
            const Monomial lmJ = tableau_poly(tJ[static_cast<size_t>(a)]).leading_monomial();
            const Monomial lmK = tableau_poly(tK[static_cast<size_t>(a)]).leading_monomial();
            for (int q = 0; q + 1 <= p; ++q) {
                for (int u = 0; u < static_cast<int>(Rlm[static_cast<size_t>(q)].size()); ++u) {
                    const int i = index_of(Rlm[static_cast<size_t>(q) + 1],
                                           lmJ.times(Rlm[static_cast<size_t>(q)][static_cast<size_t>(u)]));
                    for (int vp = 0; vp < static_cast<int>(Slm[static_cast<size_t>(p - 1 - q)].size()); ++vp) {
                        const int jj = index_of(Slm[static_cast<size_t>(p - q)],
                                                lmK.times(Slm[static_cast<size_t>(p - 1 - q)][static_cast<size_t>(vp)]));
                        if (i < 0 || jj < 0) {
                            ++out.toric_missing;
                            continue;
                        }
                        std::vector<std::pair<long long, mpq_class>> row;
                        row.emplace_back(idx.at(q + 1, i, vp), 1);
                        row.emplace_back(idx.at(q, u, jj), -1);
                        trows.push_back(std::move(row));
                    }
                }
            }
        }
        out.toric_numerator = idx.total;
        out.toric_rank = rank_of_rows(trows, idx.total);
        out.toric_dim = static_cast<int>(out.toric_numerator - out.toric_rank);
        out.toric_equal = (out.toric_dim == out.dim);
    }
    return out;
}

} // namespace stm

#include "stmlab/sections.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "stmlab/errors.hpp"

namespace stm {

Polynomial tableau_poly(const Tableau& t) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& [pos, R] : t.rows)
        p = p.times(minor_poly(R, t.shape->cols[static_cast<size_t>(pos)], t.shape->side));
    return p;
}

SectionSpace SectionSpace::build(const BlockShape& shape) {
    SectionSpace s;
    s.shape = std::make_shared<const BlockShape>(shape);
    s.ordered_count = count_ordered_tableaux(shape);
    s.generators = enumerate_tableaux_dedup(s.shape);
    s.generator_polys.reserve(s.generators.size());
    for (const auto& t : s.generators) s.generator_polys.push_back(tableau_poly(t));
    s.straight = enumerate_straight(s.shape);
    s.straight_polys.reserve(s.straight.size());
    for (const auto& t : s.straight) s.straight_polys.push_back(tableau_poly(t));
    s.echelon = echelonize(s.generator_polys);
    s.dim = s.echelon.rank();
    s.basis_ok = (s.dim == static_cast<int>(s.straight.size()));
    return s;
}

std::optional<Tableau> phi(const Tableau& t, const Word& j) {
    const BlockShape& old = *t.shape;
    if (old.side != Restriction::upper || !(old.word == longest_word(old.n)))
        throw std::invalid_argument("phi: input must live on the full word, primal side");
    if (!is_subword(j, old.word)) throw std::invalid_argument("phi: j must be a subword");
    std::vector<int> mult = old.mult;
    for (int r = 1; r <= j.length(); ++r)
        if (j.letter(r) == 0) mult[static_cast<size_t>(r - 1)] = 0;
    auto shape = std::make_shared<const BlockShape>(BlockShape::of(Shape(j, mult)));
    Tableau out;
    out.shape = shape;
    for (const auto& [pos, R] : t.rows) {
        if (j.letter(pos + 1) == 0) continue; // the factor restricts to 1
        const IndexSet& K = shape->cols[static_cast<size_t>(pos)];
        if (!dominates(K, R)) return std::nullopt; // zero image
        out.rows.emplace_back(pos, R);
    }
    return out;
}

RestrictionCertificate restriction_certificate(const Word& j, const std::vector<int>& m) {
    const int n = j.n();
    const Word i = longest_word(n);
    if (static_cast<int>(m.size()) != i.length())
        throw std::invalid_argument("restriction_certificate: bad multiplicity length");
    RestrictionCertificate cert;
    cert.meff = m;
    for (int r = 1; r <= j.length(); ++r)
        if (j.letter(r) == 0) cert.meff[static_cast<size_t>(r - 1)] = 0;

    const SectionSpace full = SectionSpace::build(BlockShape::of(Shape(i, cert.meff)));
    const SectionSpace sub = SectionSpace::build(BlockShape::of(Shape(j, cert.meff)));
    cert.dim_full = full.dim;
    cert.straight_full = static_cast<int>(full.straight.size());
    cert.dim_sub = sub.dim;
    cert.straight_sub = static_cast<int>(sub.straight.size());
    cert.kernel_dim = full.dim - sub.dim;

    std::vector<Polynomial> flagged;
    for (size_t k = 0; k < full.generators.size(); ++k)
        if (!phi(full.generators[k], j)) flagged.push_back(full.generator_polys[k]);
    cert.flagged_count = static_cast<int>(flagged.size());
    cert.flagged_rank = rank_of_span(flagged);

    for (const auto& t : full.straight)
        if (phi(t, j)) ++cert.straight_with_condition;

    const auto cols_i = column_sets(i);
    const auto cols_j = column_sets(j);
    for (int r = 1; r <= j.length(); ++r) {
        if (j.letter(r) == 0) continue;
        KernelCondition c;
        c.r = r;
        c.full_cols = cols_i[static_cast<size_t>(r - 1)];
        c.sub_cols = cols_j[static_cast<size_t>(r - 1)];
        c.is_void = true;
        for (const IndexSet& R : admissible_rows(c.full_cols, n, Restriction::upper))
            if (!dominates(c.sub_cols, R)) {
                c.is_void = false;
                break;
            }
        cert.conditions.push_back(std::move(c));
    }
    cert.pass = full.basis_ok && sub.basis_ok && cert.kernel_dim >= 0;
    return cert;
}

namespace {

std::vector<IndexSet> all_subsets(int n, int d) {
    std::vector<IndexSet> out;
    std::vector<int> pick(static_cast<size_t>(d));
    std::function<void(int, int)> rec = [&](int next, int k) {
        if (k == d) {
            out.emplace_back(pick);
            return;
        }
        for (int x = next; x <= n; ++x) {
            pick[static_cast<size_t>(k)] = x;
            rec(x + 1, k + 1);
        }
    };
    rec(1, 0);
    return out;
}

} // namespace

std::vector<FlagMonomial> flag_monomials(int n, const std::vector<int>& mult) {
    if (static_cast<int>(mult.size()) != n - 1)
        throw std::invalid_argument("flag_monomials: need one multiplicity per degree 1..n-1");
    std::vector<FlagMonomial> out;
    FlagMonomial cur;
    cur.n = n;
    cur.rows.assign(static_cast<size_t>(n - 1), {});
    std::function<void(int)> rec_deg = [&](int d) {
        if (d == n) {
            out.push_back(cur);
            return;
        }
        const int m = mult[static_cast<size_t>(d - 1)];
        if (m == 0) {
            rec_deg(d + 1);
            return;
        }
        const auto subs = all_subsets(n, d);
        std::vector<int> idx(static_cast<size_t>(m), 0);
        std::function<void(size_t, int)> rec_row = [&](size_t k, int from) {
            if (k == idx.size()) {
                auto& block = cur.rows[static_cast<size_t>(d - 1)];
                block.clear();
                for (int i : idx) block.push_back(subs[static_cast<size_t>(i)]);
                rec_deg(d + 1);
                return;
            }
            for (int i = from; i < static_cast<int>(subs.size()); ++i) {
                idx[k] = i;
                rec_row(k + 1, i);
            }
        };
        rec_row(0, 0);
    };
    rec_deg(1);
    return out;
}

Polynomial flag_poly(const FlagMonomial& f) {
    Polynomial p = Polynomial::constant(1);
    for (size_t d = 1; d <= f.rows.size(); ++d)
        for (const IndexSet& R : f.rows[d - 1])
            p = p.times(minor_poly(R, IndexSet::range(static_cast<int>(d))));
    return p;
}

namespace {

mpz_class det_flag_minor(const ExactMatrix& X, const IndexSet& R) {
    const int d = R.size();
    std::vector<int> perm(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) perm[static_cast<size_t>(k)] = k;
    mpq_class total = 0;
    do {
        int inv = 0;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)]) ++inv;
        mpq_class term = (inv % 2) ? -1 : 1;
        for (int k = 0; k < d; ++k) term *= X.at(R[k] - 1, perm[static_cast<size_t>(k)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total.get_num(); // integer samples: the denominator is 1
}

} // namespace

mpz_class flag_eval(const FlagMonomial& f, const ExactMatrix& X) {
    mpz_class v = 1;
    for (size_t d = 1; d <= f.rows.size(); ++d)
        for (const IndexSet& R : f.rows[d - 1]) v *= det_flag_minor(X, R);
    return v;
}

bool is_semistandard(const FlagMonomial& f) {
    // Young-tableau columns: longest first, lexicographic within a length.
    std::vector<const IndexSet*> cols;
    for (size_t d = f.rows.size(); d >= 1; --d)
        for (const IndexSet& R : f.rows[d - 1]) cols.push_back(&R);
    for (size_t k = 1; k < cols.size(); ++k) {
        const IndexSet& X = *cols[k - 1];
        const IndexSet& Y = *cols[k];
        for (int i = 0; i < Y.size(); ++i)
            if (X[i] > Y[i]) return false;
    }
    return true;
}

bool schubert_ok(const Permutation& w, const FlagMonomial& f) {
    for (size_t d = 1; d <= f.rows.size(); ++d)
        for (const IndexSet& R : f.rows[d - 1])
            if (!dominates(uparrow(w, static_cast<int>(d)), R)) return false;
    return true;
}

bool sandwich_ok(const Permutation& w, const Permutation& v, const FlagMonomial& f) {
    if (!schubert_ok(w, f)) return false;
    for (size_t d = 1; d <= f.rows.size(); ++d)
        for (const IndexSet& R : f.rows[d - 1])
            if (!dominates(R, uparrow(v, static_cast<int>(d)))) return false;
    return true;
}

std::vector<FlagMonomial> schubert_monomials(const Permutation& w, const std::vector<int>& mult) {
    std::vector<FlagMonomial> out;
    for (const auto& f : flag_monomials(w.n(), mult))
        if (is_semistandard(f) && schubert_ok(w, f)) out.push_back(f);
    return out;
}

std::vector<FlagMonomial> richardson_monomials(const Permutation& w, const Permutation& v,
                                               const std::vector<int>& mult) {
    std::vector<FlagMonomial> out;
    if (!bruhat_leq(v, w)) return out;
    for (const auto& f : flag_monomials(w.n(), mult))
        if (is_semistandard(f) && sandwich_ok(w, v, f)) out.push_back(f);
    return out;
}

namespace {
int random_entry(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % (2ull * bound + 1)) - bound;
}
} // namespace

ExactMatrix sample_schubert_matrix(const Permutation& w, std::mt19937_64& rng, int bound) {
    const int n = w.n();
    ExactMatrix U(n, n);
    for (int i = 0; i < n; ++i) {
        U.at(i, i) = 1;
        for (int j = i + 1; j < n; ++j) U.at(i, j) = random_entry(rng, bound);
    }
    ExactMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= n; ++k) M.at(i, k - 1) = U.at(i, w(k) - 1);
    return M;
}

ExactMatrix sample_opposite_matrix(const Permutation& v, std::mt19937_64& rng, int bound) {
    const int n = v.n();
    ExactMatrix L(n, n);
    for (int i = 0; i < n; ++i) {
        L.at(i, i) = 1;
        for (int j = 0; j < i; ++j) L.at(i, j) = random_entry(rng, bound);
    }
    ExactMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= n; ++k) M.at(i, k - 1) = L.at(i, v(k) - 1);
    return M;
}

namespace {

// Evaluation matrix of the flag monomials at a sample list.
ExactMatrix eval_matrix(const std::vector<FlagMonomial>& fms, const std::vector<ExactMatrix>& samples) {
    ExactMatrix E(static_cast<int>(samples.size()), static_cast<int>(fms.size()));
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t k = 0; k < fms.size(); ++k)
            E.at(static_cast<int>(i), static_cast<int>(k)) = flag_eval(fms[k], samples[i]);
    return E;
}

ExactMatrix top_rows(const ExactMatrix& E, int rows) {
    ExactMatrix T(rows, E.cols());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < E.cols(); ++j) T.at(i, j) = E.at(i, j);
    return T;
}

ExactMatrix stack(const ExactMatrix& A, const ExactMatrix& B) {
    ExactMatrix S(A.rows() + B.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) S.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) S.at(A.rows() + i, j) = B.at(i, j);
    return S;
}

int stable_rank(const ExactMatrix& E2N, int N, const char* what) {
    const int r1 = matrix_rank(top_rows(E2N, N));
    const int r2 = matrix_rank(E2N);
    if (r1 != r2) {
        std::ostringstream os;
        os << what << ": rank " << r1 << " at N samples became " << r2
           << " at 2N; rerun with a new seed";
        throw UnstableSample(os.str());
    }
    return r1;
}

} // namespace

int schubert_dim_oracle(const Permutation& w, const std::vector<int>& mult, const SamplePlan& plan) {
    const auto fms = flag_monomials(w.n(), mult);
    const int N = static_cast<int>(fms.size()) + plan.margin;
    std::mt19937_64 rng(plan.seed);
    std::vector<ExactMatrix> samples;
    samples.reserve(static_cast<size_t>(2 * N));
    for (int k = 0; k < 2 * N; ++k) samples.push_back(sample_schubert_matrix(w, rng, plan.bound));
    return stable_rank(eval_matrix(fms, samples), N, "schubert_dim_oracle");
}

int richardson_dim_oracle(const Permutation& w, const Permutation& v,
                          const std::vector<int>& mult, const SamplePlan& plan) {
    if (!bruhat_leq(v, w)) return 0;
    const auto fms = flag_monomials(w.n(), mult);
    const int N = static_cast<int>(fms.size()) + plan.margin;
    std::mt19937_64 rng_w(plan.seed);
    std::mt19937_64 rng_v(plan.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<ExactMatrix> sw, sv;
    for (int k = 0; k < 2 * N; ++k) sw.push_back(sample_schubert_matrix(w, rng_w, plan.bound));
    for (int k = 0; k < 2 * N; ++k) sv.push_back(sample_opposite_matrix(v, rng_v, plan.bound));
    const ExactMatrix Ew = eval_matrix(fms, sw);
    const ExactMatrix Ev = eval_matrix(fms, sv);
    const int a = stable_rank(Ew, N, "richardson_dim_oracle (upper cell)");
    const int b = stable_rank(Ev, N, "richardson_dim_oracle (opposite cell)");
    const int c2 = matrix_rank(stack(Ew, Ev));
    const int c1 = matrix_rank(stack(top_rows(Ew, N), top_rows(Ev, N)));
    if (c1 != c2)
        throw UnstableSample("richardson_dim_oracle (stacked): rank changed when doubling N");
    return a + b - c1;
}

std::vector<mpq_class> straighten(const Tableau& t, const SectionSpace& space) {
    auto coords = express_in_basis(tableau_poly(t), space.straight_polys);
    if (!coords)
        throw TheoremViolation("straighten: tableau polynomial outside the straight-basis span");
    return *coords;
}

} // namespace stm

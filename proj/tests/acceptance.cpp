// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  All golden values were produced by independent oracles before
// being frozen here.
#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

#include "stmlab/degeneration.hpp"
#include "stmlab/driver.hpp"
#include "stmlab/errors.hpp"
#include "stmlab/fiberprod.hpp"
#include "stmlab/sections.hpp"

using namespace stm;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void note(const std::string& text) {
    std::printf("       note: %s\n", text.c_str());
    std::fflush(stdout);
}

SectionSpace build(const char* word, std::vector<int> m, int n) {
    return SectionSpace::build(BlockShape::of(Shape(Word::parse(word, n), std::move(m))));
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

int main() {
    // Shared heavy builds (reused by criteria 1, 5 and 6).
    const SectionSpace n3_full = build("1,2,1", {1, 1, 1}, 3);
    const SectionSpace n4_full = build("1,2,1,3,2,1", {1, 1, 1, 1, 1, 1}, 4);

    // ---- 1: straight tableaux are a basis ------------------------------
    {
        bool ok = n3_full.ordered_count == 18 && n3_full.dim == 13 &&
                  static_cast<int>(n3_full.straight.size()) == 13 && n3_full.basis_ok;
        ok = ok && n4_full.ordered_count == 1728 && n4_full.dim == 394 &&
             static_cast<int>(n4_full.straight.size()) == 394 && n4_full.basis_ok;
        report(1, "straight-basis theorem (n=3: 18 generators, rank 13; n=4: 1728 generators, rank 394)",
               ok);
        note("the hand-derived n=3 value 11 was refuted by the rank oracle; the frozen value is 13");
    }

    // ---- 2: subword restriction ----------------------------------------
    {
        RestrictionCertificate cert =
            restriction_certificate(Word::parse("1,0,0,0,2,1", 4), {1, 1, 1, 1, 1, 1});
        const bool rank_nullity = (cert.dim_full == cert.kernel_dim + cert.dim_sub);
        bool ok = cert.pass && rank_nullity && cert.dim_full == 40 && cert.dim_sub == 13 &&
                  cert.straight_sub == 13 && cert.kernel_dim == 27 && cert.flagged_count == 30;
        // the nonvoid/void split of the kernel conditions
        bool cond_ok = cert.conditions.size() == 3 && cert.conditions[0].is_void &&
                       !cert.conditions[1].is_void;
        report(2, "subword restriction j=(1,0,0,0,2,1): rank-nullity 40 = 27 + 13, straight basis of the image",
               ok && cond_ok);
        note("run at the effective multiplicities (1,0,0,0,1,1); entries on omitted letters do not enter");
        note("findings: straight-with-condition count " + std::to_string(cert.straight_with_condition) +
             " != dim 13 and flagged-generator rank " + std::to_string(cert.flagged_rank) +
             " < kernel dimension 27; the image basis is indexed by the subword-shape straight tableaux");
    }

    // ---- 3: Schubert standard monomials vs sampling oracle -------------
    {
        const std::vector<int> counts = {1, 2, 2, 5, 6, 8}; // filter counts, S_3 in lex order
        const auto S3 = symmetric_group(3);
        bool ok = static_cast<int>(flag_monomials(3, {1, 1}).size()) == 9;
        const auto& w0 = S3.back();
        ok = ok && static_cast<int>(schubert_monomials(w0, {1, 1}).size()) == 8; // full space
        std::vector<std::string> findings;
        for (std::uint64_t seed : {2026ull, 7ull, 99ull}) {
            const SamplePlan plan{seed, 25, 50};
            for (size_t k = 0; k < S3.size(); ++k) {
                const int count = static_cast<int>(schubert_monomials(S3[k], {1, 1}).size());
                ok = ok && count == counts[k];
                try {
                    const int oracle = schubert_dim_oracle(S3[k], {1, 1}, plan);
                    if (oracle != count) {
                        ok = false;
                        findings.push_back("w=" + S3[k].str() + " seed=" + std::to_string(seed) +
                                           " count=" + std::to_string(count) +
                                           " oracle=" + std::to_string(oracle));
                    }
                } catch (const UnstableSample& e) {
                    ok = false;
                    findings.push_back("w=" + S3[k].str() + " unstable: " + e.what());
                }
            }
        }
        report(3, "Schubert standard monomials (n=3, m=(1,1), all w, 3 seeds): filter count = sampled rank",
               ok);
        for (const auto& f : findings) note("mismatch: " + f);
        note("refutation: for w=[3,1,2] the filtered count is 6 but the section space of X_w has");
        note("dimension 5 (all seeds, rank stable under doubling): the minor on rows {2,3} vanishes");
        note("on X_w, so the quadratic Pluecker relation makes two filtered monomials proportional;");
        note("rowwise dominance is necessary but not sufficient for linear independence here");
    }

    // ---- 4: Richardson sandwich ----------------------------------------
    {
        bool ok = true;
        std::vector<std::string> findings;
        const auto S3 = symmetric_group(3);
        const SamplePlan plan{2026, 25, 50};
        const std::vector<std::vector<int>> mults = {{1, 0}, {0, 1}, {1, 1}};
        auto check_pair = [&](const Permutation& w, const Permutation& v,
                              const std::vector<int>& m) {
            const int count = static_cast<int>(richardson_monomials(w, v, m).size());
            try {
                const int oracle = richardson_dim_oracle(w, v, m, plan);
                bool here = (oracle == count);
                if (!bruhat_leq(v, w)) here = here && count == 0 && oracle == 0;
                if (!here)
                    findings.push_back("w=" + w.str() + " v=" + v.str() +
                                       " count=" + std::to_string(count) +
                                       " oracle=" + std::to_string(oracle));
                ok = ok && here;
            } catch (const UnstableSample& e) {
                ok = false;
                findings.push_back("w=" + w.str() + " v=" + v.str() + " unstable: " + e.what());
            }
        };
        for (const auto& w : S3)
            for (const auto& v : S3)
                for (const auto& m : mults) check_pair(w, v, m);
        // S_4 spot checks (the third embeds a failing S_3 pair one rank up)
        const std::vector<std::pair<const char*, const char*>> s4pairs = {
            {"[2,1,3,4]", "[1,2,3,4]"}, {"[1,3,2,4]", "[1,3,2,4]"}, {"[3,2,1,4]", "[2,1,3,4]"}};
        for (const auto& [ws, vs] : s4pairs)
            check_pair(Permutation::parse(ws), Permutation::parse(vs), {1, 1, 1});
        report(4, "Richardson sandwich (all 36 ordered S_3 pairs x 3 multiplicities, 3 S_4 spot pairs)",
               ok);
        for (const auto& f : findings) note("mismatch: " + f);
        note("refutation: five S_3 pairs at m=(1,1) (and their S_4 embeddings) overcount by one,");
        note("by the same quadratic-relation mechanism as criterion 3; every mismatch has");
        note("oracle = count - 1 and is stable across seeds and sample doubling");
    }

    // ---- 5: opposite-side involution -----------------------------------
    {
        bool ok = true;
        const std::vector<std::tuple<const char*, std::vector<int>, int>> shapes = {
            {"1,2,1", {1, 1, 1}, 3},
            {"1,2,1", {2, 2, 2}, 3},
            {"1,0,0,0,2,1", {1, 0, 0, 0, 1, 1}, 4},
            {"1,2,1,3,2,1", {0, 0, 0, 1, 1, 1}, 4}};
        for (const auto& [word, m, n] : shapes) {
            auto s = std::make_shared<const BlockShape>(
                BlockShape::of(Shape(Word::parse(word, n), m)));
            for (const auto& t : enumerate_tableaux_dedup(s)) {
                const Tableau r = involution(t);
                ok = ok && involution(r) == t && r.shape->side == Restriction::lower;
            }
            const SectionSpace primal =
                (*s == *n3_full.shape) ? n3_full : SectionSpace::build(*s);
            const SectionSpace opp = SectionSpace::build(s->opposite());
            ok = ok && primal.dim == opp.dim &&
                 primal.straight.size() == opp.straight.size() && opp.basis_ok;
        }
        report(5, "involution is an order-2 bijection; opposite-side dimensions match on all tested shapes",
               ok);
    }

    // ---- 6: toric degeneration, degree-wise ----------------------------
    {
        bool ok = true;
        std::string detail;
        auto check_shape = [&](const char* word, std::vector<int> m, int n, int pmax,
                               const SectionSpace* prebuilt) {
            const BlockShape sh = BlockShape::of(Shape(Word::parse(word, n), m));
            const SectionSpace& deg1 = prebuilt ? *prebuilt : build(word, m, n);
            bool here = true;
            try {
                const auto lm1 = straight_lms(deg1); // throws on any collision
                here = here && initial_piece(sh, 1).lm_set == lm1;
                for (int p = 2; p <= pmax; ++p) here = here && sagbi_degree_check(sh, p).pass;
            } catch (const TheoremViolation&) {
                here = false;
            }
            if (!here && detail.empty()) detail = std::string("shape ") + word;
            ok = ok && here;
        };
        check_shape("1,2,1", {1, 1, 1}, 3, 3, &n3_full);
        check_shape("1,2,1,3,2,1", {0, 0, 0, 1, 1, 1}, 4, 2, nullptr);
        check_shape("1,2,1,3,2,1", {0, 0, 0, 2, 2, 2}, 4, 1, nullptr);
        check_shape("1,0,0,0,2,1", {1, 0, 0, 0, 1, 1}, 4, 2, nullptr);
        check_shape("1,2,1,3,2,1", {1, 1, 1, 1, 1, 1}, 4, 1, &n4_full);
        report(6, "degree-wise toric degeneration (distinct leading monomials, product semigroup, Hilbert match)",
               ok, detail);
        note("tested at p <= 3 for n=3, p <= 2 for the n=4 tail and subword shapes, p = 1 for the full n=4 shape");
    }

    // ---- 7: fiber-product coproduct ------------------------------------
    {
        bool ok = true;
        std::string detail;
        try {
            const Shape i3(Word::parse("1,2,1", 3), {1, 1, 1});
            const CoproductPiece p1 = coproduct_piece(i3, i3, 1);
            ok = ok && p1.dim_A1 == 8 && p1.phi_j_rank == 8 && p1.phi_k_rank == 8;
            ok = ok && p1.dim == 18 && p1.dim == p1.dims_R[1] + p1.dims_S[1] - p1.dim_A1;
            const CoproductPiece p2 = coproduct_piece(i3, i3, 2);
            ok = ok && p2.numerator == 271 && p2.relation_count == 208 &&
                 p2.relation_rank == 171 && p2.dim == 100;
            ok = ok && p2.stability_checked && p2.augmented_rank == 171 && p2.stability_pass;
            if (!ok)
                detail = "p1.dim=" + std::to_string(p1.dim) + " p2.dim=" + std::to_string(p2.dim) +
                         " p2.rank=" + std::to_string(p2.relation_rank) +
                         " p2.aug=" + std::to_string(p2.augmented_rank);
            report(7, "fiber product (j=k=i, n=3: injective lifts, dim 18 at p=1, dim 100 stable at p=2)",
                   ok, detail);
            note("leading-monomial shadow (informative): p=1 dim " + std::to_string(p1.toric_dim) +
                 " vs exact 18, p=2 dim " + std::to_string(p2.toric_dim) +
                 " vs exact 100; two degree-1 lifts share a leading-monomial pair, so the shadow");
            note("relation module has lower rank than the exact one (reported, not gated)");
        } catch (const std::exception& e) {
            report(7, "fiber product (j=k=i, n=3: injective lifts, dim 18 at p=1, dim 100 stable at p=2)",
                   false, e.what());
        }
    }

    // ---- 8: determinism -------------------------------------------------
    {
        RunConfig cfg;
        cfg.n = 3;
        cfg.word = "1,2,1";
        cfg.mult = {1, 1, 1};
        const std::string first = strip_timing(run_verify_bs(cfg)).dump();
        const std::string second = strip_timing(run_verify_bs(cfg)).dump();
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        const std::string one_thread = strip_timing(run_verify_bs(cfg)).dump();
        omp_set_num_threads(saved > 1 ? saved : 3);
        const std::string many_threads = strip_timing(run_verify_bs(cfg)).dump();
        omp_set_num_threads(saved);
        RunConfig rcfg;
        rcfg.n = 3;
        rcfg.w = "[2,3,1]";
        rcfg.v = "[1,2,3]";
        rcfg.mult = {1, 1};
        const std::string r1 = strip_timing(run_verify_richardson(rcfg)).dump();
        const std::string r2 = strip_timing(run_verify_richardson(rcfg)).dump();
        const bool ok = first == second && first == one_thread && first == many_threads && r1 == r2;
        report(8, "determinism (byte-identical reports modulo timing, across runs and thread counts)", ok);
    }

    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}

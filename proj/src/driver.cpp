#include "stmlab/driver.hpp"

#include <chrono>

#include "stmlab/degeneration.hpp"
#include "stmlab/errors.hpp"
#include "stmlab/fiberprod.hpp"
#include "stmlab/sections.hpp"

namespace stm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json mult_json(const std::vector<int>& m) { return Json(m); }

Json index_sets_json(const std::vector<IndexSet>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) out.push_back(Json(s.elems()));
    return out;
}

Shape shape_of(const RunConfig& cfg) {
    return Shape(Word::parse(cfg.word, cfg.n), cfg.mult);
}

Json section_check(const SectionSpace& s) {
    Json c;
    c["generator_count"] = s.ordered_count;
    c["multiset_count"] = static_cast<long long>(s.generators.size());
    c["straight_count"] = static_cast<long long>(s.straight.size());
    c["rank"] = s.dim;
    bool lms_distinct = true;
    bool pivots_eq = false;
    try {
        pivots_eq = (straight_lms(s) == s.echelon.pivots());
    } catch (const TheoremViolation&) {
        lms_distinct = false;
    }
    c["lms_distinct"] = lms_distinct;
    c["pivots_equal_straight_lms"] = pivots_eq;
    c["pass"] = s.basis_ok && lms_distinct && pivots_eq;
    return c;
}

} // namespace

Json strip_timing(Json j) {
    if (j.is_object()) {
        j.erase("timing");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

Json run_columns(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const Word w = Word::parse(cfg.word, cfg.n);
    Json check;
    check["id"] = "columns";
    check["word"] = w.str();
    check["column_sets"] = index_sets_json(column_sets(w));
    check["pass"] = true;
    return make_report("columns", Json{{"n", cfg.n}, {"word", cfg.word}}, Json::array({check}),
                       ms_since(t0));
}

Json run_enumerate(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    auto shape = std::make_shared<const BlockShape>(BlockShape::of(shape_of(cfg)));
    Json check;
    check["id"] = "enumerate";
    check["word"] = cfg.word;
    check["mult"] = mult_json(cfg.mult);
    check["generator_count"] = count_ordered_tableaux(*shape);
    const auto dedup = enumerate_tableaux_dedup(shape);
    const auto straight = enumerate_straight(shape);
    check["multiset_count"] = static_cast<long long>(dedup.size());
    check["straight_count"] = static_cast<long long>(straight.size());
    if (cfg.dump_tableaux) {
        Json grids = Json::array();
        for (const auto& t : straight) grids.push_back(render(t));
        check["straight_tableaux"] = grids;
    }
    check["pass"] = true;
    return make_report("enumerate", Json{{"n", cfg.n}, {"word", cfg.word}, {"mult", mult_json(cfg.mult)}},
                       Json::array({check}), ms_since(t0));
}

Json run_dim(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const SectionSpace s = SectionSpace::build(BlockShape::of(shape_of(cfg)));
    Json check = section_check(s);
    check["id"] = "dim";
    check["word"] = cfg.word;
    check["mult"] = mult_json(cfg.mult);
    return make_report("dim", Json{{"n", cfg.n}, {"word", cfg.word}, {"mult", mult_json(cfg.mult)}},
                       Json::array({check}), ms_since(t0));
}

Json run_verify_bs(const RunConfig& cfg) {
    Json r = run_dim(cfg);
    r["command"] = "verify bs";
    r["checks"][0]["id"] = "bs";
    return r;
}

Json run_verify_restriction(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const Word j = Word::parse(cfg.word, cfg.n);
    const RestrictionCertificate cert = restriction_certificate(j, cfg.mult);
    Json check;
    check["id"] = "restriction";
    check["subword"] = j.str();
    check["mult"] = mult_json(cfg.mult);
    check["mult_effective"] = mult_json(cert.meff);
    check["dim_full"] = cert.dim_full;
    check["straight_full"] = cert.straight_full;
    check["dim_sub"] = cert.dim_sub;
    check["straight_sub"] = cert.straight_sub;
    check["kernel_dim"] = cert.kernel_dim;
    check["flagged_count"] = cert.flagged_count;
    check["flagged_rank"] = cert.flagged_rank;
    check["straight_with_condition"] = cert.straight_with_condition;
    Json conds = Json::array();
    for (const auto& c : cert.conditions)
        conds.push_back(Json{{"r", c.r},
                             {"full_cols", Json(c.full_cols.elems())},
                             {"sub_cols", Json(c.sub_cols.elems())},
                             {"void", c.is_void}});
    check["kernel_conditions"] = conds;
    check["pass"] = cert.pass;
    return make_report("verify restriction",
                       Json{{"n", cfg.n}, {"subword", cfg.word}, {"mult", mult_json(cfg.mult)}},
                       Json::array({check}), ms_since(t0));
}

Json run_verify_schubert(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const Permutation w = Permutation::parse(cfg.w);
    const auto count = static_cast<int>(schubert_monomials(w, cfg.mult).size());
    Json checks = Json::array();
    for (std::uint64_t seed : cfg.seeds) {
        SamplePlan plan{seed, cfg.margin, cfg.bound};
        Json check;
        check["id"] = "schubert seed=" + std::to_string(seed);
        check["w"] = w.str();
        check["mult"] = mult_json(cfg.mult);
        check["monomial_count"] = count;
        check["seed"] = seed;
        try {
            const int oracle = schubert_dim_oracle(w, cfg.mult, plan);
            check["oracle_rank"] = oracle;
            check["pass"] = (oracle == count);
        } catch (const UnstableSample& e) {
            check["error"] = e.what();
            check["pass"] = false;
        }
        checks.push_back(std::move(check));
    }
    return make_report("verify schubert",
                       Json{{"n", cfg.n}, {"w", cfg.w}, {"mult", mult_json(cfg.mult)},
                            {"seeds", cfg.seeds}, {"bound", cfg.bound}, {"margin", cfg.margin}},
                       std::move(checks), ms_since(t0));
}

Json run_verify_richardson(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const Permutation w = Permutation::parse(cfg.w);
    const Permutation v = Permutation::parse(cfg.v);
    const auto count = static_cast<int>(richardson_monomials(w, v, cfg.mult).size());
    Json checks = Json::array();
    for (std::uint64_t seed : cfg.seeds) {
        SamplePlan plan{seed, cfg.margin, cfg.bound};
        Json check;
        check["id"] = "richardson seed=" + std::to_string(seed);
        check["w"] = w.str();
        check["v"] = v.str();
        check["mult"] = mult_json(cfg.mult);
        check["comparable"] = bruhat_leq(v, w);
        check["monomial_count"] = count;
        check["seed"] = seed;
        try {
            const int oracle = richardson_dim_oracle(w, v, cfg.mult, plan);
            check["oracle_rank"] = oracle;
            check["pass"] = (oracle == count);
        } catch (const UnstableSample& e) {
            check["error"] = e.what();
            check["pass"] = false;
        }
        checks.push_back(std::move(check));
    }
    return make_report("verify richardson",
                       Json{{"n", cfg.n}, {"w", cfg.w}, {"v", cfg.v}, {"mult", mult_json(cfg.mult)},
                            {"seeds", cfg.seeds}, {"bound", cfg.bound}, {"margin", cfg.margin}},
                       std::move(checks), ms_since(t0));
}

Json run_verify_sagbi(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const BlockShape shape = BlockShape::of(shape_of(cfg));
    const SagbiReport rep = sagbi_degree_check(shape, cfg.power);
    Json check;
    check["id"] = "sagbi p=" + std::to_string(cfg.power);
    check["word"] = cfg.word;
    check["mult"] = mult_json(cfg.mult);
    check["p"] = rep.p;
    check["dim_1"] = rep.dim_1;
    check["dim_p"] = rep.dim_p;
    check["pivots_equal_straight_lms"] = rep.pivots_equal_straight_lms;
    check["contained_in_products"] = rep.contained_in_products;
    check["hilbert_match"] = rep.hilbert_match;
    Json off = Json::array();
    for (const auto& m : rep.offending) off.push_back(m.str());
    check["offending"] = off;
    check["pass"] = rep.pass;
    return make_report("verify sagbi",
                       Json{{"n", cfg.n}, {"word", cfg.word}, {"mult", mult_json(cfg.mult)},
                            {"power", cfg.power}},
                       Json::array({check}), ms_since(t0));
}

Json run_fiber_dim(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const Shape js(Word::parse(cfg.word_j, cfg.n), cfg.mult);
    const Shape ks(Word::parse(cfg.word_k, cfg.n), cfg.mult);
    const CoproductPiece piece = coproduct_piece(js, ks, cfg.power);
    Json check;
    check["id"] = "fiber p=" + std::to_string(cfg.power);
    check["j"] = js.word.str();
    check["k"] = ks.word.str();
    check["m"] = mult_json(cfg.mult);
    check["p"] = piece.p;
    check["numerator"] = piece.numerator;
    check["relation_count"] = piece.relation_count;
    check["relation_rank"] = piece.relation_rank;
    check["dim"] = piece.dim;
    check["dim_A1"] = piece.dim_A1;
    check["phi_j_rank"] = piece.phi_j_rank;
    check["phi_k_rank"] = piece.phi_k_rank;
    check["dims_R"] = piece.dims_R;
    check["dims_S"] = piece.dims_S;
    check["stability_checked"] = piece.stability_checked;
    check["dim_A2"] = piece.dim_A2;
    check["augmented_rank"] = piece.augmented_rank;
    check["stability_pass"] = piece.stability_pass;
    check["toric_checked"] = piece.toric_checked;
    check["toric_dim"] = piece.toric_dim;
    check["toric_missing"] = piece.toric_missing;
    check["toric_equal"] = piece.toric_equal;
    const bool injective = (piece.phi_j_rank == piece.dim_A1 && piece.phi_k_rank == piece.dim_A1);
    check["pass"] = injective && piece.stability_pass;
    return make_report("fiber dim",
                       Json{{"n", cfg.n}, {"word_j", cfg.word_j}, {"word_k", cfg.word_k},
                            {"mult", mult_json(cfg.mult)}, {"power", cfg.power}},
                       Json::array({check}), ms_since(t0));
}

} // namespace stm

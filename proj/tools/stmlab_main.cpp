#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stmlab/driver.hpp"
#include "stmlab/errors.hpp"

namespace {

// Exit codes: 0 = all checks pass, 1 = usage/config error,
// 2 = a verification produced a failing finding.
constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

struct CommonOpts {
    std::string out;
    std::string golden;
};

void add_common(CLI::App* cmd, stm::RunConfig& cfg, CommonOpts& io) {
    cmd->add_option("--out", io.out, "write the JSON report to this path");
    cmd->add_option("--golden", io.golden, "compare the report against this golden file");
    cmd->set_config("--config", "", "key=value config file mirroring the flags");
    cmd->add_option("--seeds", cfg.seeds, "sampling seeds")->delimiter(',');
    cmd->add_option("--margin", cfg.margin, "extra samples beyond the span size");
    cmd->add_option("--bound", cfg.bound, "random entries drawn from [-bound, bound]");
}

int finish(const stm::Json& report, const CommonOpts& io) {
    if (!io.out.empty()) stm::write_json(io.out, report);
    std::cout << report.dump(2) << std::endl;
    if (!io.golden.empty()) {
        const stm::Json golden = stm::load_json(io.golden);
        const auto diffs = stm::golden_diff(report, golden);
        if (!diffs.empty()) {
            for (const auto& d : diffs) std::cerr << "golden mismatch " << d << '\n';
            return kExitFinding;
        }
    }
    return stm::all_pass(report) ? kExitPass : kExitFinding;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for straight-tableau bases, standard monomials, "
                 "toric degenerations and fiber products"};
    app.require_subcommand(1);

    stm::RunConfig cfg;
    CommonOpts io;
    std::string mult_text;
    auto parse_mult = [&]() {
        cfg.mult.clear();
        if (mult_text.empty()) return;
        size_t pos = 0;
        while (pos != std::string::npos) {
            const size_t comma = mult_text.find(',', pos);
            cfg.mult.push_back(std::stoi(mult_text.substr(pos, comma - pos)));
            pos = (comma == std::string::npos) ? comma : comma + 1;
        }
    };

    auto* columns = app.add_subcommand("columns", "column sets of a (sub)word");
    columns->add_option("--n", cfg.n)->required();
    columns->add_option("--word", cfg.word)->required();
    add_common(columns, cfg, io);

    auto* enumerate = app.add_subcommand("enumerate", "tableaux of a shape");
    enumerate->add_option("--n", cfg.n)->required();
    enumerate->add_option("--word", cfg.word)->required();
    enumerate->add_option("--mult", mult_text)->required();
    enumerate->add_flag("--dump-tableaux", cfg.dump_tableaux, "include straight grids in the report");
    add_common(enumerate, cfg, io);

    auto* dim = app.add_subcommand("dim", "dimension certificate of a graded piece");
    dim->add_option("--n", cfg.n)->required();
    dim->add_option("--word", cfg.word)->required();
    dim->add_option("--mult", mult_text)->required();
    add_common(dim, cfg, io);

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* vbs = verify->add_subcommand("bs", "straight-basis theorem on one shape");
    vbs->add_option("--n", cfg.n)->required();
    vbs->add_option("--word", cfg.word)->required();
    vbs->add_option("--mult", mult_text)->required();
    add_common(vbs, cfg, io);
    auto* vrest = verify->add_subcommand("restriction", "subword restriction certificate");
    vrest->add_option("--n", cfg.n)->required();
    vrest->add_option("--word,--subword", cfg.word)->required();
    vrest->add_option("--mult", mult_text)->required();
    add_common(vrest, cfg, io);
    auto* vschub = verify->add_subcommand("schubert", "standard monomials vs point-sampling rank");
    vschub->add_option("--n", cfg.n)->required();
    vschub->add_option("--w", cfg.w)->required();
    vschub->add_option("--mult", mult_text)->required();
    add_common(vschub, cfg, io);
    auto* vrich = verify->add_subcommand("richardson", "sandwich monomials vs point-sampling rank");
    vrich->add_option("--n", cfg.n)->required();
    vrich->add_option("--w", cfg.w)->required();
    vrich->add_option("--v", cfg.v)->required();
    vrich->add_option("--mult", mult_text)->required();
    add_common(vrich, cfg, io);
    auto* vsagbi = verify->add_subcommand("sagbi", "degree-wise initial-algebra checks");
    vsagbi->add_option("--n", cfg.n)->required();
    vsagbi->add_option("--word", cfg.word)->required();
    vsagbi->add_option("--mult", mult_text)->required();
    vsagbi->add_option("--power", cfg.power);
    add_common(vsagbi, cfg, io);

    auto* fiber = app.add_subcommand("fiber", "fiber-product coproduct pieces");
    fiber->require_subcommand(1);
    auto* fdim = fiber->add_subcommand("dim", "dimension of a graded coproduct piece");
    fdim->add_option("--n", cfg.n)->required();
    fdim->add_option("--word-j", cfg.word_j)->required();
    fdim->add_option("--word-k", cfg.word_k)->required();
    fdim->add_option("--mult", mult_text)->required();
    fdim->add_option("--power", cfg.power);
    add_common(fdim, cfg, io);

    std::string cmp_report, cmp_golden;
    auto* cmp = app.add_subcommand("compare", "diff a stored report against a golden file");
    cmp->add_option("--report", cmp_report)->required();
    cmp->add_option("--golden", cmp_golden)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        parse_mult();
        if (cmp->parsed()) {
            const auto diffs = stm::golden_diff(stm::load_json(cmp_report), stm::load_json(cmp_golden));
            for (const auto& d : diffs) std::cout << d << '\n';
            return diffs.empty() ? kExitPass : kExitFinding;
        }
        stm::Json report;
        if (columns->parsed()) report = stm::run_columns(cfg);
        else if (enumerate->parsed()) report = stm::run_enumerate(cfg);
        else if (dim->parsed()) report = stm::run_dim(cfg);
        else if (vbs->parsed()) report = stm::run_verify_bs(cfg);
        else if (vrest->parsed()) report = stm::run_verify_restriction(cfg);
        else if (vschub->parsed()) report = stm::run_verify_schubert(cfg);
        else if (vrich->parsed()) report = stm::run_verify_richardson(cfg);
        else if (vsagbi->parsed()) report = stm::run_verify_sagbi(cfg);
        else if (fdim->parsed()) report = stm::run_fiber_dim(cfg);
        else return kExitUsage;
        return finish(report, io);
    } catch (const stm::TheoremViolation& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return kExitFinding;
    } catch (const stm::UnstableSample& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return kExitFinding;
    } catch (const stm::EmptyFiber& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return kExitFinding;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

// qlambda: tables of q-lambda families, q-zeta values, p-adic Riemann sums
// and the identity verification harness.
//
//   qlambda numbers --family G --q 1/2 --lambda rou:1/0 --nmax 2
//   qlambda zeta --kind second --s 0 --q 1/2 --lambda -1
//   qlambda padic --side fermionic --c -1 --k 2 --lambda 6 --N1 1 --N2 5
//   qlambda verify --module padic --format jsonl

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qlambda/commands.hpp"
#include "qlambda/verify.hpp"

using namespace qlambda;

namespace {

struct Common {
    std::string format;
    double tol = 1e-10;
    std::size_t max_terms = 1'000'000;
};

std::string default_format() {
    const char* env = std::getenv("QLAMBDA_FORMAT");
    return env && *env ? env : "table";
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format: table, jsonl or csv (default from QLAMBDA_FORMAT, else table)")
        ->check(CLI::IsMember({"table", "jsonl", "csv"}));
    cmd->add_option("--tol", c.tol, "Series truncation tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--max-terms", c.max_terms, "Series term limit")->check(CLI::PositiveNumber)->capture_default_str();
}

int emit(const commands::CommandResult& r, const Common& c) {
    std::cout << io::render(r.records, io::parse_format(c.format));
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-analogue lambda-Bernoulli/Euler/Genocchi tables, q-zeta values, p-adic Riemann sums"};
    app.require_subcommand(1);

    Common common;
    common.format = default_format();

    commands::NumbersArgs num;
    auto* numbers = app.add_subcommand("numbers", "Tabulate a q-family for n = 0..nmax");
    auto* polys = app.add_subcommand("polys", "Same as numbers, evaluated at --x");
    for (auto* cmd : {numbers, polys}) {
        cmd->add_option("--family", num.family, "beta, B, E, G or Edc")->required();
        cmd->add_option("--q", num.q, "q as a/b or re,im")->capture_default_str();
        cmd->add_option("--lambda", num.lambda, "lambda as rou:f/a, a/b or re,im")->capture_default_str();
        cmd->add_option("--nmax", num.nmax, "Largest index")->capture_default_str();
        cmd->add_option("--mode", num.mode, "closed, series or both")
            ->check(CLI::IsMember({"closed", "series", "both"}))
            ->capture_default_str();
        add_common(cmd, common);
    }
    numbers->add_option_function<std::string>("--x", [&](const std::string& v) { num.x = v; }, "Polynomial argument x >= 0");
    polys->add_option_function<std::string>("--x", [&](const std::string& v) { num.x = v; }, "Polynomial argument x >= 0")
        ->required();

    commands::ZetaArgs zeta;
    auto* zcmd = app.add_subcommand("zeta", "Evaluate a q-zeta function or the Lerch transcendent");
    zcmd->add_option("--kind", zeta.kind, "first, second, hurwitz-euler or lerch")
        ->check(CLI::IsMember({"first", "second", "hurwitz-euler", "lerch"}))
        ->capture_default_str();
    zcmd->add_option("--s", zeta.s, "s as re,im")->capture_default_str();
    zcmd->add_option("--q", zeta.q, "q as a/b or re,im")->capture_default_str();
    zcmd->add_option("--lambda", zeta.lambda, "lambda (the argument z for lerch)")->capture_default_str();
    zcmd->add_option("--x", zeta.x, "Shift x (a for lerch)")->capture_default_str();
    add_common(zcmd, common);

    commands::PadicArgs pad;
    auto* pcmd = app.add_subcommand("padic", "p-adic Riemann sums S_N and their distance to the closed form");
    pcmd->add_option("--p", pad.p, "Odd prime")->capture_default_str();
    pcmd->add_option("--q", pad.q, "q as 1+p or a rational unit")->capture_default_str();
    pcmd->add_option("--N1", pad.n1, "First level")->capture_default_str();
    pcmd->add_option("--N2", pad.n2, "Last level")->capture_default_str();
    pcmd->add_option("--M", pad.M, "Relative precision in digits")->check(CLI::PositiveNumber)->capture_default_str();
    pcmd->add_option("--c", pad.c, "Integrand exponent c (0 or -1)")->check(CLI::IsMember({0, -1}))->capture_default_str();
    pcmd->add_option("--k", pad.k, "Bracket power k")->capture_default_str();
    pcmd->add_option("--lambda", pad.lambda, "lambda as a rational")->capture_default_str();
    pcmd->add_option("--x0", pad.x0, "Shift of the bracket argument")->capture_default_str();
    pcmd->add_option("--side", pad.side, "bosonic or fermionic")
        ->check(CLI::IsMember({"bosonic", "fermionic"}))
        ->capture_default_str();
    add_common(pcmd, common);

    verify::VerifyOptions vopt;
    std::string q_grid, lambda_grid, report_path;
    bool no_correction = false;
    auto* vcmd = app.add_subcommand("verify", "Run the identity checks");
    vcmd->add_option("--module", vopt.modules, "Only checks of these modules");
    vcmd->add_option("--check", vopt.checks, "Only these checks");
    vcmd->add_flag("--no-correction", no_correction, "Alternating sum without the lambda^n factor");
    vcmd->add_option("--q-grid", q_grid, "Override the q grid, e.g. 0.3;0.5");
    vcmd->add_option("--lambda-grid", lambda_grid, "Override the lambda grid, e.g. rou:3/1;rou:4/1");
    vcmd->add_option("--nmax", vopt.nmax, "Override the index range of grid checks");
    vcmd->add_option("--report", report_path, "Also write the report as one JSON document");
    add_common(vcmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : commands::kUsageError;
    }

    try {
        if (numbers->parsed()) return emit(commands::cmd_numbers(num), common);
        if (polys->parsed()) return emit(commands::cmd_numbers(num), common);
        if (zcmd->parsed()) {
            zeta.tol = common.tol;
            zeta.max_terms = common.max_terms;
            return emit(commands::cmd_zeta(zeta), common);
        }
        if (pcmd->parsed()) return emit(commands::cmd_padic(pad), common);
        if (vcmd->parsed()) {
            vopt.correction = !no_correction;
            const auto split = [](const std::string& s) {
                std::vector<std::string> out;
                std::stringstream ss(s);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    if (!tok.empty()) out.push_back(tok);
                return out;
            };
            if (!q_grid.empty()) {
                vopt.qs.clear();
                for (const auto& t : split(q_grid)) vopt.qs.push_back(io::parse_real(t));
            }
            if (!lambda_grid.empty()) {
                vopt.lambdas.clear();
                for (const auto& t : split(lambda_grid)) vopt.lambdas.push_back(io::parse_lambda(t));
            }
            const auto report = verify::run(vopt);
            std::cout << verify::render(report, io::parse_format(common.format));
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                if (!f) throw DomainError("cannot write report to " + report_path);
                f << verify::to_json(report).dump(2) << "\n";
            }
            return report.exit_code();
        }
    } catch (const Error& e) {
        std::cerr << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return commands::kUsageError;
    }
    return commands::kUsageError;
}

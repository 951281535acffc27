#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "tncodes/errors.hpp"
#include "tncodes/report.hpp"

namespace {

using tncodes::OutputFormat;
using tncodes::RunConfig;

void add_tower_options(CLI::App* sub, RunConfig& cfg, bool with_degree)
{
    sub->add_option("--p", cfg.p, "characteristic (prime)")->required();
    sub->add_option("--e", cfg.e, "q = p^e")->capture_default_str();
    sub->add_option("--f", cfg.f, "middle degree, f | k")->capture_default_str();
    sub->add_option("--k", cfg.k, "top degree over F_q")->capture_default_str();
    if (with_degree) sub->add_option("--m", cfg.m, "field degree over F_p (default e*k)");
}

void add_common_options(CLI::App* sub, RunConfig& cfg)
{
    static const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
    sub->add_option("--budget", cfg.budget, "largest field size to construct");
    sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json | csv | text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Trace/norm defining-set codes over finite-field towers"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* field = app.add_subcommand("field", "describe F_{p^m}, m = e*k unless --m is given");
    add_tower_options(field, cfg, true);
    add_common_options(field, cfg);

    CLI::App* code = app.add_subcommand("code", "build a code, enumerate it, compare with the closed forms");
    add_tower_options(code, cfg, false);
    add_common_options(code, cfg);
    code->add_option("--a", cfg.a, "label of a in F_q, 0 for the a = 0 code")->capture_default_str();
    code->add_flag("--punctured", cfg.punctured, "keep one point per F_q^* orbit (a = 0 only)");

    CLI::App* gauss = app.add_subcommand("gauss", "exact Gauss sum G(psi_j, chi) over F_{p^m}");
    add_tower_options(gauss, cfg, true);
    add_common_options(gauss, cfg);
    gauss->add_option("--j", cfg.j, "multiplicative character index, psi_j(alpha) = zeta^j")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common_options(verify, cfg);
    verify->add_option("--suite", cfg.suite, "examples | lemmas | grid")->required();

    CLI::App* search = app.add_subcommand("search", "enumerate every admissible tuple within the budget");
    add_common_options(search, cfg);
    search->add_option("--filter", cfg.filter, "griesmer-met | two-weight | inapplicable | ss-ok");
    search->add_option("--max-p", cfg.max_p, "largest characteristic, 0 for no limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*field) return tncodes::cmd_field(cfg, std::cout, std::cerr);
        if (*code) return tncodes::cmd_code(cfg, std::cout, std::cerr);
        if (*gauss) return tncodes::cmd_gauss(cfg, std::cout, std::cerr);
        if (*verify) return tncodes::cmd_verify(cfg, std::cout, std::cerr);
        if (*search) return tncodes::cmd_search(cfg, std::cout, std::cerr);
    } catch (const tncodes::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tncodes::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

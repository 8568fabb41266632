#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <nckit/config.hpp>
#include <nckit/expr.hpp>
#include <nckit/grid.hpp>
#include <nckit/report.hpp>
#include <nckit/suites.hpp>

using namespace nckit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
    std::string theta_file;
    std::uint64_t seed = 42;
    int cases = -1;
    int order = 2;
    std::string json_path;
};

std::optional<ThetaProfile> theta_from_file(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return ThetaConfig::from(ConfigFile::load(path)).profile();
}

void emit_json(const std::string& path, const std::string& doc) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << doc << "\n";
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << doc << "\n";
}

int cmd_reduce(const std::vector<std::string>& words, const Common& c) {
    std::string src;
    if (words.size() == 1 && words[0] == "-") {
        src.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        for (const auto& w : words) src += (src.empty() ? "" : " ") + w;
    }
    ThetaProfile th = theta_from_file(c.theta_file).value_or(ThetaProfile::zero());
    StarContext ctx(th, c.order >= 0 ? std::optional<int>(c.order) : std::nullopt);
    std::string out = reduce(src, ctx);
    if (c.json_path != "-") std::cout << out << "\n";
    emit_json(c.json_path, reduce_json(src, out, th));
    return kPass;
}

int cmd_verify(const std::string& suite, const Common& c) {
    SuiteOptions opts;
    opts.seed = c.seed;
    opts.cases = c.cases;
    opts.order = c.order;
    opts.theta = theta_from_file(c.theta_file);
    SuiteReport r = run_suite(suite, opts);
    if (c.json_path != "-") std::cout << report_text(r);
    emit_json(c.json_path, report_json(r));
    return r.passed() ? kPass : kFail;
}

int cmd_planewave(const std::string& specfile, const Common& c) {
    ConfigFile cfg = ConfigFile::load(specfile);
    PlaneWaveSpec spec = planewave_spec_from(cfg);
    std::optional<ThetaProfile> th = theta_from_file(c.theta_file);
    if (!th) th = cfg.has_section("theta") ? ThetaConfig::from(cfg).profile() : ThetaProfile::zero();
    PlaneWaveReport r = planewave_report(spec, *th);
    if (c.json_path != "-") std::cout << report_text(r);
    emit_json(c.json_path, report_json(r));
    return r.passed() ? kPass : kFail;
}

int cmd_grid_check(const std::string& gridfile, const Common& c) {
    GridCheckReport r = grid_check(read_grid(gridfile));
    if (c.json_path != "-") std::cout << report_text(r);
    emit_json(c.json_path, report_json(r));
    return r.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nckit: exact checks for gauge theory on time-dependent Moyal space"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--theta", c.theta_file, "config file with a [theta] section");
        sub->add_option("--order", c.order, "eps cutoff N (statements hold mod eps^(N+1))");
        sub->add_option("--json", c.json_path, "write the JSON report here ('-' for stdout)");
    };

    std::vector<std::string> expr_words;
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce an expression to canonical form");
    reduce_cmd->add_option("expr", expr_words, "expression, or '-' to read stdin")->required()->expected(1, -1);
    add_common(reduce_cmd);

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("suite", suite, "star, calculus, gauge, scalar, planewave or grid")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--seed", c.seed, "random seed");
    verify_cmd->add_option("--cases", c.cases, "number of random cases");
    add_common(verify_cmd);

    std::string specfile;
    auto* pw_cmd = app.add_subcommand("planewave", "plane-wave action report");
    pw_cmd->add_option("specfile", specfile, "config with a [planewave] section")->required();
    add_common(pw_cmd);

    std::string gridfile;
    auto* grid_cmd = app.add_subcommand("grid-check", "trace, cyclicity and associativity of a sampled field");
    grid_cmd->add_option("gridfile", gridfile, "NCGRID01 binary or CSV grid")->required();
    grid_cmd->add_option("--json", c.json_path, "write the JSON report here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*reduce_cmd) return cmd_reduce(expr_words, c);
        if (*verify_cmd) return cmd_verify(suite, c);
        if (*pw_cmd) return cmd_planewave(specfile, c);
        if (*grid_cmd) return cmd_grid_check(gridfile, c);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const GradingError& e) {
        std::cerr << "grading error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

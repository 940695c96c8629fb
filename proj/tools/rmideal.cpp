// rmideal: sampling, analysis, Monte Carlo, exact enumeration and the
// acceptance suite for edge ideals of Erdős–Rényi graphs.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "commands.hpp"

namespace {

using namespace rmideal;
using namespace rmideal::cli;

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

void add_format(CLI::App* app, Format& target, std::vector<std::string> allowed) {
    std::map<std::string, Format> subset;
    for (const auto& a : allowed) subset.emplace(a, kFormats.at(a));
    app->add_option("--format", target, "output format")->transform(CLI::CheckedTransformer(subset, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random monomial ideals: edge ideals of G(n,p) and their algebraic invariants"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rmideal 1.0.0");
    int rc = kOk;

    SampleConfig sample;
    auto* s = app.add_subcommand("sample", "sample G(n,p) graphs");
    s->add_option("--n", sample.n, "vertices")->required();
    s->add_option("--p", sample.p, "edge probability")->required();
    s->add_option("--seed", sample.seed, "seed");
    s->add_option("--trial", sample.first_trial, "first trial index (stream)");
    s->add_option("--count", sample.count, "number of graphs");
    s->add_flag("--ideals", sample.ideals, "also emit edge and cover ideals (JSON)");
    add_format(s, sample.format, {"text", "json"});
    s->add_option("--out", sample.out, "output file");
    s->callback([&] { rc = cmd_sample(sample, std::cout); });

    AnalyzeConfig analyze;
    auto* a = app.add_subcommand("analyze", "report invariants of a graph file");
    a->add_option("input", analyze.input, "graph file (text or JSON; - for stdin)")->required();
    a->add_option("--checks", analyze.checks, "subset of: dim,height,edge_ideal_normal,cover_normality,hochster,bounds,generators")
        ->delimiter(',');
    a->add_option("--out", analyze.out, "output file");
    a->callback([&] { rc = cmd_analyze(analyze, std::cout); });

    McConfig mc;
    bool mc_no_timing = false;
    auto* m = app.add_subcommand("mc", "Monte Carlo estimate of an event probability");
    m->add_option("--n", mc.n, "vertices")->required();
    m->add_option("--p", mc.p, "edge probability")->required();
    m->add_option("--event", mc.event, "event name, e.g. has_cycle or dim_ge:3")->required();
    m->add_option("--trials", mc.trials, "trials");
    m->add_option("--seed", mc.seed, "seed");
    m->add_option("--confidence", mc.confidence, "Wilson interval coverage");
    m->add_option("--jobs", mc.jobs, "worker threads (0 = all cores)");
    m->add_flag("--no-timing", mc_no_timing, "report seconds as 0 (byte-stable output)");
    add_format(m, mc.format, {"csv", "json"});
    m->add_option("--out", mc.out, "output file");
    m->callback([&] {
        mc.timing = !mc_no_timing;
        rc = cmd_mc(mc, std::cout);
    });

    SweepConfig sw;
    bool sw_no_timing = false;
    auto* w = app.add_subcommand("sweep", "Monte Carlo over n with p or q following a schedule");
    w->add_option("--event", sw.event, "event name")->required();
    w->add_option("--schedule", sw.schedule, "p=c*n^-alpha or q=c*n^-alpha")->required();
    w->add_option("--n", sw.ns, "comma-separated ascending n values")->required()->delimiter(',');
    w->add_option("--trials", sw.trials, "trials per n");
    w->add_option("--seed", sw.seed, "seed");
    w->add_option("--confidence", sw.confidence, "Wilson interval coverage");
    w->add_option("--jobs", sw.jobs, "worker threads (0 = all cores)");
    w->add_flag("--no-timing", sw_no_timing, "report seconds as 0 (byte-stable output)");
    add_format(w, sw.format, {"csv", "json"});
    w->add_option("--out", sw.out, "output file");
    w->callback([&] {
        sw.timing = !sw_no_timing;
        rc = cmd_sweep(sw, std::cout, std::cerr);
    });

    OracleConfig oracle;
    auto* o = app.add_subcommand("oracle", "exact probability polynomial by exhaustive enumeration");
    o->add_option("--n", oracle.n, "vertices")->required();
    auto* ev_opt = o->add_option("--event", oracle.event, "event name");
    auto* pat_opt = o->add_option("--pattern", oracle.pattern, "T or E<t>");
    ev_opt->excludes(pat_opt);
    o->add_flag("--expectation", oracle.expectation, "E[Y_pattern] instead of an event probability");
    o->add_flag("--compare", oracle.compare, "tabulate oracle vs closed forms on a p grid");
    o->add_option("--p", oracle.p_grid, "p grid (decimals or fractions, comma-separated)")->delimiter(',');
    o->add_option("--cap", oracle.cap, "largest n to enumerate");
    o->add_flag("--allow-n8", oracle.allow_eight, "permit n=8 (2^28 graphs)");
    o->add_option("--jobs", oracle.jobs, "worker threads (0 = all cores)");
    add_format(o, oracle.format, {"csv", "json"});
    o->add_option("--out", oracle.out, "output file");
    o->callback([&] { rc = cmd_oracle(oracle, std::cout); });

    acceptance::Options verify;
    auto* v = app.add_subcommand("verify", "run the acceptance suite");
    v->add_option("--only", verify.only, "comma-separated check ids or key substrings");
    v->add_option("--seed", verify.seed, "seed");
    v->add_option("--jobs", verify.jobs, "worker threads (0 = all cores)");
    v->callback([&] {
        const auto results = acceptance::run(verify, std::cout);
        if (results.empty()) throw ParameterError("--only matched no checks");
        rc = acceptance::all_passed(results) ? kOk : kCheckFailure;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailure;
    }
    return rc;
}

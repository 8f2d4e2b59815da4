// wg: exact Weingarten calculus from the command line.
//
// Exit codes: 0 success, 1 verify found a violated bound, 2 malformed input,
// 3 enumeration/table cap exceeded, 4 singular linear system. Nothing is
// written to stdout unless the run completes; diagnostics go to stderr.

#include "wg/errors.hpp"
#include "wg/exact.hpp"
#include "wg/graph.hpp"
#include "wg/harness.hpp"
#include "wg/process.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

struct Options {
    std::string group = "U";
    int n = 0;
    std::string N;
    std::string klass;
    std::string sigma;
    std::string pairing;
    std::string lambda;
    std::string method; // empty: recursion for U, gram for O and SP
    std::string stat = "trace";
    std::string exponent = "3/2";
    std::string claim;
    std::string format = "text";
    std::string out;
    int g = 0;
    int g1 = 0;
    int g2 = 0;
    int g_max = 6;
    int tail_i = 0;
    int tail_t = 20;
    int nmax = 0;
    int norm_cap = 2;
    bool all_classes = false;
    long samples = -1;
    std::uint64_t seed = 1;
};

void write_output(const Options &opt, const std::string &text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
}

wg::Rat parse_N(const Options &opt) {
    if (opt.N.empty())
        throw wg::ParseError("--N is required (exact integer or p/q)");
    return wg::parse_rational(opt.N);
}

// exactly one way to name the state
void check_exclusive(const Options &opt) {
    int given = 0;
    given += opt.klass.empty() ? 0 : 1;
    given += opt.sigma.empty() ? 0 : 1;
    given += opt.pairing.empty() ? 0 : 1;
    given += opt.lambda.empty() ? 0 : 1;
    if (given > 1)
        throw wg::ParseError(
            "state specifiers --class, --sigma, --pairing and --lambda are mutually exclusive");
}

int run_eval(const Options &opt_in) {
    using namespace wg;
    Options opt = opt_in;
    check_exclusive(opt);
    MatrixGroup group = parse_group(opt.group);
    if (opt.method.empty())
        opt.method = group == MatrixGroup::Unitary ? "recursion" : "gram";
    Rat N = parse_N(opt);
    std::ostringstream text;

    if (opt.method == "series") {
        SeriesApproximation s;
        if (group == MatrixGroup::Unitary) {
            Permutation sigma = !opt.sigma.empty()
                                    ? parse_permutation(opt.sigma, opt.n)
                                    : class_representative(parse_partition(opt.klass));
            s = wg_unitary_series(sigma, N, opt.g_max);
        } else if (group == MatrixGroup::Orthogonal) {
            Pairing pi = !opt.pairing.empty() ? parse_pairing(opt.pairing)
                                              : template_pairing(parse_partition(opt.klass));
            s = wg_orthogonal_series(pi, N, opt.g_max);
        } else {
            throw ParseError("eval: --method series supports groups U and O");
        }
        text << "partial " << rat_to_string(s.partial) << "\n"
             << "tail " << rat_to_string(s.tail) << "\n";
        write_output(opt, text.str());
        return 0;
    }

    if (opt.method == "closed") {
        if (group != MatrixGroup::Unitary)
            throw ParseError("eval: --method closed is the unitary full-cycle formula");
        int n = opt.n;
        if (!opt.klass.empty()) {
            Partition lambda = parse_partition(opt.klass);
            if (lambda.length() != 1)
                throw ParseError("eval: --method closed needs the full-cycle class (n)");
            n = lambda.size();
        }
        if (n < 1)
            throw ParseError("eval: --n or --class required for the closed form");
        text << rat_to_string(wg_full_cycle(n, N)) << "\n";
        write_output(opt, text.str());
        return 0;
    }

    int n = opt.n;
    if (n == 0 && !opt.klass.empty())
        n = parse_partition(opt.klass).size();
    if (n < 1)
        throw ParseError("eval: --n is required");

    WgTable table;
    if (group == MatrixGroup::Unitary) {
        if (opt.method == "recursion")
            table = wg_unitary_recursion(n, N);
        else if (opt.method == "gram")
            table = wg_unitary_gram(n, N);
        else
            throw ParseError("eval: unknown --method '" + opt.method + "'");
    } else if (group == MatrixGroup::Orthogonal) {
        if (opt.method != "gram")
            throw ParseError("eval: group O supports --method gram or series");
        table = wg_orthogonal_gram(n, N);
    } else {
        if (opt.method != "gram")
            throw ParseError("eval: group SP supports --method gram");
        if (N.get_den() != 1 || N <= 0)
            throw ParseError("eval: symplectic N must be a positive integer");
        table = wg_symplectic_magnitudes(n, N.get_num());
    }

    const bool sp = group == MatrixGroup::Symplectic;
    if (opt.format == "json") {
        write_output(opt, table_to_json(table) + "\n");
        return 0;
    }
    if (!opt.klass.empty() || partitions_of(n).size() == 1) {
        Partition lambda = !opt.klass.empty() ? parse_partition(opt.klass)
                                              : partitions_of(n).front();
        text << (sp ? "±" : "") << rat_to_string(table.value(lambda)) << "\n";
    } else if (opt.format == "csv") {
        text << "class,value\n";
        for (const Partition &lambda : partitions_of(n))
            text << '"' << to_string(lambda) << "\"," << (sp ? "±" : "")
                 << rat_to_string(table.value(lambda)) << "\n";
    } else {
        for (const Partition &lambda : partitions_of(n))
            text << to_string(lambda) << "\t" << (sp ? "±" : "")
                 << rat_to_string(table.value(lambda)) << "\n";
    }
    write_output(opt, text.str());
    return 0;
}

int run_paths(const Options &opt) {
    using namespace wg;
    check_exclusive(opt);
    MatrixGroup group = parse_group(opt.group);
    std::ostringstream text;
    if (group == MatrixGroup::Unitary) {
        if (opt.all_classes) {
            if (opt.n < 1)
                throw ParseError("paths: --n required with --all");
            text << unitary_counts_csv(opt.n, opt.g);
        } else {
            Permutation sigma = !opt.sigma.empty()
                                    ? parse_permutation(opt.sigma, opt.n)
                                    : class_representative(parse_partition(opt.klass));
            text << count_paths_unitary(sigma, opt.g).get_str() << "\n";
        }
    } else if (group == MatrixGroup::Orthogonal) {
        if (opt.all_classes) {
            if (opt.n < 1)
                throw ParseError("paths: --n required with --all");
            text << orthogonal_counts_csv(opt.n, opt.g1, opt.g2);
        } else {
            Pairing pi = !opt.pairing.empty() ? parse_pairing(opt.pairing)
                                              : template_pairing(parse_partition(opt.klass));
            text << count_paths_orthogonal(pi, opt.g1, opt.g2).get_str() << "\n";
        }
    } else {
        throw ParseError("paths: group must be U or O");
    }
    write_output(opt, text.str());
    return 0;
}

int run_sample(const Options &opt) {
    using namespace wg;
    check_exclusive(opt);
    MatrixGroup group = parse_group(opt.group);
    std::ostringstream text;
    long samples = opt.samples < 0 ? 1 : opt.samples;

    if (opt.stat == "trace") {
        for (long run = 0; run < samples; ++run) {
            Rng rng = Rng::for_stream(opt.seed, static_cast<std::uint64_t>(run));
            ProcessTrace trace;
            if (group == MatrixGroup::Unitary) {
                trace = !opt.sigma.empty()
                            ? run_wp_unitary(parse_permutation(opt.sigma, opt.n), rng)
                            : run_wp_unitary(parse_partition(opt.lambda), rng);
            } else if (group == MatrixGroup::Orthogonal) {
                trace = !opt.pairing.empty()
                            ? run_wp_orthogonal(parse_pairing(opt.pairing), rng)
                            : run_wp_orthogonal(parse_partition(opt.lambda), rng);
            } else {
                throw ParseError("sample: group must be U or O");
            }
            text << trace_to_jsonl(trace);
        }
        write_output(opt, text.str());
        return 0;
    }

    if (group != MatrixGroup::Unitary)
        throw ParseError("sample: statistic '" + opt.stat + "' is defined for --group U");
    Partition lambda = parse_partition(opt.lambda);
    if (samples == 1 && opt.samples < 0)
        samples = 1000;
    EstimatorReport report;
    if (opt.stat == "Lsum") {
        PowerExponent p;
        if (opt.exponent == "3/2")
            p = PowerExponent::ThreeHalves;
        else if (opt.exponent == "1")
            p = PowerExponent::One;
        else
            throw ParseError("sample: --exponent must be 3/2 or 1");
        report = estimate_L_power_sum(lambda, p, samples, opt.seed);
    } else if (opt.stat == "T") {
        report = estimate_time_to_halve(lambda, samples, opt.seed);
    } else if (opt.stat == "Titail") {
        report = estimate_Ti_tail(lambda, opt.tail_i, opt.tail_t, samples, opt.seed);
    } else {
        throw ParseError("sample: unknown --stat '" + opt.stat + "'");
    }
    text << report_to_json(report) << "\n";
    write_output(opt, text.str());
    return 0;
}

int run_verify(const Options &opt) {
    using namespace wg;
    if (opt.claim.empty())
        throw ParseError("verify: --claim is required");
    long samples = opt.samples < 0 ? (opt.claim == "process" ? 1000 : 2000) : opt.samples;
    std::vector<BoundCheckResult> rows;
    if (opt.claim == "main") {
        rows = check_theorem_main(opt.n, parse_N(opt));
    } else if (opt.claim == "orth") {
        rows = check_theorem_orthogonal(opt.n, parse_N(opt));
    } else if (opt.claim == "small") {
        int nmax = opt.nmax > 0 ? opt.nmax : opt.n;
        rows = check_small_perm(nmax, opt.norm_cap, {parse_N(opt)});
    } else if (opt.claim == "log") {
        rows = check_log_bound(opt.n, parse_N(opt));
    } else if (opt.claim == "paths") {
        rows = check_path_ratio_bounds(opt.n, samples, opt.seed);
    } else if (opt.claim == "process") {
        rows = check_process(parse_partition(opt.lambda), samples, opt.seed, opt.tail_i,
                             opt.tail_t);
    } else {
        throw ParseError("verify: unknown --claim '" + opt.claim + "'");
    }
    ReportFormat fmt = opt.format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    write_output(opt, report_to_string(rows, fmt));
    return all_met_pass(rows) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact Weingarten functions, path counts, Weingarten-process "
                 "sampling and desk-scale bound certification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--group", opt.group, "Matrix group: U, O or SP");
        cmd->add_option("--n", opt.n, "Level (degree / half-size)");
        cmd->add_option("--N", opt.N, "Evaluation point, exact: \"p\" or \"p/q\"");
        cmd->add_option("--class", opt.klass, "Conjugacy/coset class, e.g. \"3,1\"");
        cmd->add_option("--sigma", opt.sigma, "Permutation: \"(1 2 3)\" or one-line \"2 3 1\"");
        cmd->add_option("--pairing", opt.pairing, "Pairing: \"{1-2, 3-4}\"");
        cmd->add_option("--format", opt.format, "Output format: text, json or csv");
        cmd->add_option("--out", opt.out, "Write output to a file instead of stdout");
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--samples", opt.samples, "Monte Carlo sample count");
    };

    CLI::App *eval = app.add_subcommand("eval", "Exact Weingarten values");
    add_common(eval);
    eval->add_option("--method", opt.method, "gram, recursion, series or closed");
    eval->add_option("--g-max", opt.g_max, "Series truncation order");

    CLI::App *paths = app.add_subcommand("paths", "Exact Weingarten-graph path counts");
    add_common(paths);
    paths->add_option("--g", opt.g, "Unitary defect order");
    paths->add_option("--g1", opt.g1, "Orthogonal minor defects");
    paths->add_option("--g2", opt.g2, "Orthogonal major defects");
    paths->add_flag("--all", opt.all_classes, "CSV dump over all classes of level n");

    CLI::App *sample = app.add_subcommand("sample", "Weingarten process runs and estimators");
    add_common(sample);
    sample->add_option("--lambda", opt.lambda, "Start class, e.g. \"3,1\"");
    sample->add_option("--stat", opt.stat, "trace, Lsum, T or Titail");
    sample->add_option("--exponent", opt.exponent, "Power for Lsum: 3/2 or 1");
    sample->add_option("--i", opt.tail_i, "Coupon index for Titail");
    sample->add_option("--t", opt.tail_t, "Tail parameter for Titail");

    CLI::App *verify = app.add_subcommand("verify", "Certify bound instances");
    add_common(verify);
    verify->add_option("--claim", opt.claim, "main, orth, small, log, paths or process");
    verify->add_option("--lambda", opt.lambda, "Start class for --claim process");
    verify->add_option("--nmax", opt.nmax, "Largest level for --claim small");
    verify->add_option("--cap", opt.norm_cap, "Norm cap for --claim small");
    verify->add_option("--i", opt.tail_i, "Coupon index for the tail row");
    verify->add_option("--t", opt.tail_t, "Tail parameter for the tail row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        std::cerr << msg.str();
        (void)code;
        return 2;
    }

    try {
        if (eval->parsed())
            return run_eval(opt);
        if (paths->parsed())
            return run_paths(opt);
        if (sample->parsed())
            return run_sample(opt);
        if (verify->parsed())
            return run_verify(opt);
    } catch (const wg::CapError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wg::SingularError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const wg::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wg::DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "wg/catalan.hpp"
#include "wg/errors.hpp"
#include "wg/graph.hpp"
#include "wg/process.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

using namespace wg;

namespace {

// Exact expansion of the WP(sigma) law: every trajectory with its probability.
void expand_tree(const Permutation &state, const Rat &prob, std::vector<Permutation> &prefix,
                 const std::function<void(const std::vector<Permutation> &, const Rat &)> &sink) {
    prefix.push_back(state);
    const int k = state.degree();
    if (k == 0) {
        sink(prefix, prob);
    } else if (state.fixes(k)) {
        expand_tree(state.restrict_top(), prob, prefix, sink);
    } else {
        std::vector<int> cycle = state.cycle_through(k);
        const int l = static_cast<int>(cycle.size()) - 1;
        for (int j = 1; j <= l; ++j) {
            Rat f(catalan(j - 1) * catalan(l - j), catalan(l));
            f.canonicalize();
            expand_tree(compose(Permutation::transposition(k, cycle[j - 1], k), state), prob * f,
                        prefix, sink);
        }
    }
    prefix.pop_back();
}

std::vector<Permutation> all_of_class(const Partition &lambda) {
    std::vector<int> img(lambda.size());
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p{std::vector<int>(img)};
        if (p.cycle_type() == lambda)
            out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::string shape_history(const std::vector<Permutation> &traj, size_t upto) {
    std::string key;
    for (size_t t = 0; t <= upto; ++t) {
        key += to_string(traj[t].cycle_type());
        key += '|';
    }
    return key;
}

} // namespace

TEST_CASE("trace bookkeeping") {
    Rng rng(99);
    for (const char *text : {"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}) {
        Partition lambda = parse_partition(text);
        ProcessTrace trace = run_wp_unitary(lambda, rng);
        const int n = lambda.size();
        const int norm = n - lambda.length();
        CHECK(trace.time_steps() == n + norm);
        CHECK(trace.solid_count() == norm);
        CHECK(trace.level.front() == n);
        CHECK(trace.level.back() == 0);
        CHECK(trace.perm_states.back().degree() == 0);
        for (size_t t = 1; t < trace.level.size(); ++t) {
            CHECK(trace.level[t] <= trace.level[t - 1]);
            CHECK(trace.pivotal[t] == (trace.level[t] < trace.level[t - 1]));
            CHECK(trace.longest[t] <= std::max(trace.level[t], 0));
        }
        CHECK(trace.pivotal_time(0) == 0);
        CHECK(trace.pivotal_time(n) == trace.time_steps());
    }
}

TEST_CASE("identity start is a deterministic dashed ladder") {
    Rng rng(5);
    ProcessTrace trace = run_wp_unitary(parse_partition("1,1,1"), rng);
    CHECK(trace.time_steps() == 3);
    CHECK(trace.solid_count() == 0);
    CHECK(L_power_sum(trace, PowerExponent::One) == 3.0);
    ProcessTrace otrace = run_wp_orthogonal(Pairing::canonical(3), rng);
    CHECK(otrace.time_steps() == 3);
    CHECK(otrace.solid_count() == 0);
}

TEST_CASE("first split of a 3-cycle is j = 1 or 2 with probability 1/2") {
    std::map<std::string, int> counts;
    const int samples = 20000;
    for (int run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(31, static_cast<std::uint64_t>(run));
        ProcessTrace t = run_wp_unitary(parse_permutation("(1 2 3)"), rng);
        counts[to_cycle_string(t.perm_states[1])]++;
    }
    CHECK(counts.size() == 2);
    for (const auto &[state, c] : counts) {
        double freq = static_cast<double>(c) / samples;
        CHECK(std::fabs(freq - 0.5) < 5 * std::sqrt(0.25 / samples));
    }
}

TEST_CASE("per-path probability is exactly 1/|Moeb| (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition &lambda : partitions_of(n)) {
            Permutation rep = class_representative(lambda);
            auto paths = enumerate_minimal_paths(rep);
            Rat expected(1, moebius_abs(lambda));
            expected.canonicalize();
            Rat total = 0;
            for (const auto &p : paths) {
                CHECK(path_probability(p) == expected);
                total += path_probability(p);
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("orthogonal per-path probability is exactly 1/|Moeb| (2n <= 8)") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition &mu : partitions_of(n)) {
            Pairing rep = template_pairing(mu);
            auto paths = enumerate_minimal_paths(rep);
            CHECK(Int(paths.size()) == moebius_abs(mu));
            Rat expected(1, moebius_abs(mu));
            expected.canonicalize();
            for (const auto &p : paths)
                CHECK(path_probability(p) == expected);
        }
    }
}

TEST_CASE("orthogonal sampler visits minimal paths uniformly (coset (3,1), 2n = 8)") {
    Pairing start = template_pairing(parse_partition("3,1"));
    auto paths = enumerate_minimal_paths(start);
    const int samples = 20000;
    std::vector<int> counts(paths.size(), 0);
    for (int run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(77, static_cast<std::uint64_t>(run));
        ProcessTrace t = run_wp_orthogonal(start, rng);
        for (size_t p = 0; p < paths.size(); ++p)
            if (paths[p] == t.pair_states)
                counts[p]++;
    }
    int total = 0;
    double expect = static_cast<double>(samples) / static_cast<double>(paths.size());
    double chi2 = 0;
    for (int c : counts) {
        total += c;
        chi2 += (c - expect) * (c - expect) / expect;
    }
    CHECK(total == samples); // every sampled trajectory is an enumerated path
    CHECK(chi2 < wgtest::chi2_quantile(0.999, static_cast<int>(paths.size()) - 1));
}

TEST_CASE("pivotal-time conditional law is uniform on the class (exact, n <= 4)") {
    for (int n = 2; n <= 4; ++n) {
        for (const Partition &lambda : partitions_of(n)) {
            auto members = all_of_class(lambda);
            Rat start_prob(1, Int(members.size()));
            start_prob.canonicalize();
            // histories[m][history key][state] = probability
            std::vector<std::map<std::string, std::map<std::vector<int>, Rat>>> histories(n + 1);
            std::vector<Permutation> prefix;
            for (const Permutation &start : members) {
                expand_tree(start, start_prob, prefix,
                            [&](const std::vector<Permutation> &traj, const Rat &p) {
                                for (int m = 1; m <= n; ++m) {
                                    size_t tau = 0;
                                    while (traj[tau].degree() != n - m)
                                        ++tau;
                                    histories[m][shape_history(traj, tau)]
                                             [traj[tau].one_line()] += p;
                                }
                            });
            }
            for (int m = 1; m <= n; ++m) {
                for (const auto &[key, dist] : histories[m]) {
                    // uniform over the full class of the final shape
                    Permutation witness{std::vector<int>(dist.begin()->first)};
                    size_t class_size = all_of_class(witness.cycle_type()).size();
                    CHECK(dist.size() == class_size);
                    const Rat &p0 = dist.begin()->second;
                    for (const auto &[state, p] : dist)
                        CHECK(p == p0);
                }
            }
        }
    }
}

TEST_CASE("pivotal-time conditional law is uniform (statistical, n = 6)") {
    Partition lambda = parse_partition("2,1,1,1,1");
    const int samples = 30000;
    std::map<std::string, std::map<std::vector<int>, int>> buckets;
    for (int run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(1234, static_cast<std::uint64_t>(run));
        ProcessTrace t = run_wp_unitary(lambda, rng);
        int tau1 = t.pivotal_time(1);
        std::string key;
        for (int s = 0; s <= tau1; ++s)
            key += to_string(t.perm_states[s].cycle_type()) + "|";
        buckets[key][t.perm_states[tau1].one_line()]++;
    }
    // largest bucket: first step dashed, shape (2,1,1,1) on S_5 (10 states)
    size_t best = 0;
    std::string best_key;
    for (const auto &[key, counts] : buckets) {
        size_t total = 0;
        for (const auto &[state, c] : counts)
            total += c;
        if (total > best) {
            best = total;
            best_key = key;
        }
    }
    const auto &counts = buckets[best_key];
    CHECK(counts.size() == 10);
    double expect = static_cast<double>(best) / 10.0;
    double chi2 = 0;
    for (const auto &[state, c] : counts)
        chi2 += (c - expect) * (c - expect) / expect;
    CHECK(chi2 < wgtest::chi2_quantile(0.999, 9));
}

TEST_CASE("orthogonal and unitary partition sequences share one law (n = 5)") {
    Partition mu = parse_partition("3,2");
    const int samples = 20000;
    std::map<std::string, std::pair<int, int>> cells;
    for (int run = 0; run < samples; ++run) {
        Rng rng_u = Rng::for_stream(555, static_cast<std::uint64_t>(run));
        ProcessTrace tu = run_wp_unitary(mu, rng_u);
        std::string key_u = to_string(tu.perm_states[1].cycle_type()) + "|" +
                            to_string(tu.perm_states[2].cycle_type());
        cells[key_u].first++;
        Rng rng_o = Rng::for_stream(777, static_cast<std::uint64_t>(run));
        ProcessTrace to = run_wp_orthogonal(mu, rng_o);
        std::string key_o = to_string(to.pair_states[1].coset_type()) + "|" +
                            to_string(to.pair_states[2].coset_type());
        cells[key_o].second++;
    }
    double chi2 = 0;
    int df = -1;
    for (const auto &[key, pair] : cells) {
        double total = pair.first + pair.second;
        double e = total / 2.0;
        chi2 += (pair.first - e) * (pair.first - e) / e + (pair.second - e) * (pair.second - e) / e;
        ++df;
    }
    CHECK(wgtest::chi2_tail(chi2, df) > 1e-3);
}

TEST_CASE("estimators") {
    // deterministic ladder
    EstimatorReport flat = estimate_L_power_sum(parse_partition("1,1,1,1"), PowerExponent::One,
                                                200, 9);
    CHECK(flat.estimate == 4.0);
    CHECK(flat.std_error == 0.0);

    EstimatorReport a = estimate_L_power_sum(parse_partition("4"), PowerExponent::ThreeHalves,
                                             500, 21);
    EstimatorReport b = estimate_L_power_sum(parse_partition("4"), PowerExponent::ThreeHalves,
                                             500, 21);
    CHECK(a.estimate == b.estimate); // bit-for-bit reproducible
    CHECK(a.std_error == b.std_error);
    CHECK(a.std_error > 0);

    EstimatorReport t = estimate_time_to_halve(parse_partition("8"), 300, 3);
    CHECK(t.estimate >= 1.0);
    CHECK(t.hypotheses_met);
    EstimatorReport degenerate = estimate_time_to_halve(parse_partition("3"), 50, 3);
    CHECK(!degenerate.hypotheses_met);
    CHECK(degenerate.flag == "bound-hypotheses-unmet");

    // tail at t = 0 is exactly 1; monotone in t on common samples
    EstimatorReport tail0 = estimate_Ti_tail(parse_partition("6,6"), 0, 0, 300, 13);
    CHECK(tail0.estimate == 1.0);
    double prev = 2.0;
    for (int tv : {1, 3, 6}) {
        EstimatorReport r = estimate_Ti_tail(parse_partition("6,6"), 0, tv, 300, 13);
        CHECK(r.estimate <= prev);
        prev = r.estimate;
    }
    CHECK_THROWS_AS(estimate_Ti_tail(parse_partition("6,1"), 1, 2, 50, 13), DomainError);
    CHECK_THROWS_AS(estimate_L_power_sum(parse_partition("3"), PowerExponent::One, 0, 1),
                    DomainError);
}

TEST_CASE("power-sum estimator matches the exact tree expectation for (2,1)") {
    // exact E[sum_t L_t^{3/2}] over WP((2,1)): uniform class draw, then the
    // (here deterministic) trajectories
    Partition lambda = parse_partition("2,1");
    auto members = all_of_class(lambda);
    Rat start_prob(1, Int(members.size()));
    start_prob.canonicalize();
    double exact = 0;
    std::vector<Permutation> prefix;
    for (const Permutation &start : members) {
        expand_tree(start, start_prob, prefix,
                    [&](const std::vector<Permutation> &traj, const Rat &p) {
                        double sum = 0;
                        for (const Permutation &state : traj) {
                            int longest = 0;
                            for (const auto &cyc : state.cycles())
                                longest = std::max<int>(longest, cyc.size());
                            double v = longest;
                            sum += v * std::sqrt(v);
                        }
                        exact += rat_to_double(p) * sum;
                    });
    }
    EstimatorReport est =
        estimate_L_power_sum(lambda, PowerExponent::ThreeHalves, 4000, 1001);
    CHECK(std::fabs(est.estimate - exact) <= 5 * est.std_error + 1e-9);
}

TEST_CASE("trace jsonl and report json") {
    Rng r1(42), r2(42);
    ProcessTrace t1 = run_wp_unitary(parse_permutation("(1 2 3 4)"), r1);
    ProcessTrace t2 = run_wp_unitary(parse_permutation("(1 2 3 4)"), r2);
    CHECK(trace_to_jsonl(t1) == trace_to_jsonl(t2));
    std::istringstream lines(trace_to_jsonl(t1));
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find("\"t\":") != std::string::npos);
        CHECK(line.find("\"pivotal\":") != std::string::npos);
        ++rows;
    }
    CHECK(rows == t1.time_steps() + 1);

    EstimatorReport rep = estimate_L_power_sum(parse_partition("3"), PowerExponent::One, 10, 4);
    std::string j = report_to_json(rep);
    CHECK(j.find("\"seed\": 4") != std::string::npos);
    CHECK(j.find("\"samples\": 10") != std::string::npos);
}

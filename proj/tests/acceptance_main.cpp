// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance and threshold is pinned here in exact arithmetic wherever
// the quantities are rational.

#include "wg/catalan.hpp"
#include "wg/exact.hpp"
#include "wg/graph.hpp"
#include "wg/harness.hpp"
#include "wg/process.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <iostream>

using namespace wg;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int id, std::string what)
        : id_(id), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok) {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        std::cout << (ok ? "PASS" : "FAIL") << " " << id_ << ": " << what_ << "  ["
                  << elapsed.count() << " s]\n";
        if (!ok)
            ++failures;
    }

  private:
    int id_;
    std::string what_;
    std::chrono::steady_clock::time_point start_;
};

bool criterion1() {
    // |P(sigma, |sigma|)| = |Moeb(sigma)| for every class, n <= 7
    UnitaryPathCounter counter;
    for (int n = 1; n <= 7; ++n)
        for (const Partition &lambda : partitions_of(n))
            if (counter.count(class_representative(lambda), 0) != moebius_abs(lambda))
                return false;
    return true;
}

bool criterion2() {
    // gram == recursion on all classes, n <= 5, N in {7, 10, 100}
    for (const Rat &N : {Rat(7), Rat(10), Rat(100)}) {
        WgTable gram = wg_unitary_gram(5, N);
        WgTable rec = wg_unitary_recursion(5, N);
        for (int k = 0; k <= 5; ++k)
            for (const Partition &lambda : partitions_of(k))
                if (gram.value(lambda) != rec.value(lambda))
                    return false;
    }
    return true;
}

bool criterion3() {
    for (int n = 1; n <= 6; ++n)
        for (const Rat &N : {Rat(10), Rat(100)})
            if (wg_unitary_recursion(n, N).value(parse_partition(std::to_string(n))) !=
                wg_full_cycle(n, N))
                return false;
    return true;
}

bool criterion4() {
    // every class ratio obeys the lower and upper bounds at N = 1e5,
    // gated exactly via N^4 >= 288e12 n^6
    for (int n : {2, 3, 4}) {
        Rat N(100000);
        Rat n4 = N * N * N * N;
        Int n6 = Int(n) * n * n * n * n * n;
        if (!(n4 >= Rat(Int("288000000000000")) * n6))
            return false; // the gate must actually be met at these parameters
        auto rows = check_theorem_main(n, N);
        for (const auto &r : rows) {
            if (!r.hypothesis_met || !r.satisfied)
                return false;
        }
    }
    return true;
}

bool criterion5() {
    Permutation sigma = parse_permutation("(1 2 3 4)");
    auto paths = enumerate_minimal_paths(sigma);
    if (paths.size() != 5)
        return false;
    Rat fifth(1, 5);
    for (const auto &p : paths)
        if (path_probability(p) != fifth)
            return false;
    // 1e5 runs at seed 42: chi-square below the 0.999 quantile of chi^2_4
    const int samples = 100000;
    std::vector<int> counts(paths.size(), 0);
    for (int run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(42, static_cast<std::uint64_t>(run));
        ProcessTrace t = run_wp_unitary(sigma, rng);
        bool matched = false;
        for (size_t p = 0; p < paths.size(); ++p) {
            if (paths[p] == t.perm_states) {
                counts[p]++;
                matched = true;
                break;
            }
        }
        if (!matched)
            return false;
    }
    double expect = samples / 5.0;
    double chi2 = 0;
    for (int c : counts)
        chi2 += (c - expect) * (c - expect) / expect;
    double q999 = wgtest::chi2_quantile(0.999, 4);
    std::cout << "  criterion 5: chi2 = " << chi2 << ", threshold = " << q999 << "\n";
    return chi2 < q999;
}

bool criterion6() {
    for (int n : {50, 100}) {
        EstimatorReport est = estimate_L_power_sum(Partition(std::vector<int>{n}),
                                                   PowerExponent::ThreeHalves, 1000, 7);
        double bound = 1e6 * static_cast<double>(n) * static_cast<double>(n);
        std::cout << "  criterion 6: n=" << n << " estimate+5SE = "
                  << est.estimate + 5 * est.std_error << " vs 1e6 n^2 = " << bound << "\n";
        if (!(est.estimate + 5 * est.std_error <= bound))
            return false;
    }
    return true;
}

bool criterion7() {
    const int n = 60;
    EstimatorReport est = estimate_time_to_halve(Partition(std::vector<int>{n}), 1000, 7);
    double log_term = 1.0 + std::log(3.0 * n / (2.0 * n));
    double bound = 1e4 * (n / std::sqrt(static_cast<double>(n))) * log_term * log_term;
    std::cout << "  criterion 7: estimate+5SE = " << est.estimate + 5 * est.std_error
              << " vs bound = " << bound << "\n";
    return est.estimate + 5 * est.std_error <= bound;
}

bool criterion8() {
    OrthogonalPathCounter counter;
    for (int n = 1; n <= 4; ++n)
        for (const Pairing &pi : all_pairings(n))
            if (counter.count(pi, 0, 0) != moebius_abs(pi.coset_type()))
                return false;
    // series partial sums bracket the gram value at N = 50, 2n = 4
    Rat N(50);
    WgTable gram = wg_orthogonal_gram(2, N);
    for (const Partition &mu : partitions_of(2)) {
        Pairing rep = template_pairing(mu);
        Rat normalized = gram.value(mu);
        for (int e = 0; e < 2 + rep.norm(); ++e)
            normalized *= N;
        if (rep.norm() % 2 != 0)
            normalized = -normalized;
        for (int gmax = 0; gmax <= 6; ++gmax) {
            SeriesApproximation s = wg_orthogonal_series(rep, N, gmax);
            if (!(abs(normalized - s.partial) <= s.tail))
                return false;
        }
    }
    return true;
}

bool criterion9() {
    return parse_pairing("{1-2, 3-7, 4-6, 5-8}").coset_type() == parse_partition("3,1") &&
           parse_pairing("{1-2, 3-4, 6-7, 5-8}").coset_type() == parse_partition("2,1,1");
}

bool criterion10() {
    for (int n = 2; n <= 4; ++n) {
        auto rows = check_energy(n, Rat(10000), {Rat(3, 5), Rat(9, 10)}, 20, 424242);
        for (const auto &r : rows)
            if (!r.satisfied)
                return false;
    }
    return true;
}

bool criterion11() {
    auto small = check_small_perm(12, 2, {Rat(1000)});
    for (const auto &r : small)
        if (!r.hypothesis_met || !r.satisfied)
            return false;
    bool saw5 = false, saw33 = false;
    for (const auto &r : check_log_bound(5, Rat(10000))) {
        if (r.label == "5") {
            saw5 = true;
            if (!r.satisfied)
                return false;
        }
    }
    for (const auto &r : check_log_bound(6, Rat(10000))) {
        if (r.label == "3,3") {
            saw33 = true;
            if (!r.satisfied)
                return false;
        }
    }
    return saw5 && saw33;
}

template <typename F> void run(int id, const char *what, F f) {
    Criterion c(id, what);
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception &e) {
        std::cout << "  criterion " << id << " threw: " << e.what() << "\n";
    }
    c.finish(ok);
}

} // namespace

int main() {
    run(1, "minimal path counts match the Moebius magnitude (n <= 7)", criterion1);
    run(2, "gram oracle == loop-equation recursion (n <= 5, N in {7,10,100})", criterion2);
    run(3, "recursion matches the full-cycle closed form (n <= 6)", criterion3);
    run(4, "upper and lower ratio bounds at N = 1e5 (n in {2,3,4})", criterion4);
    run(5, "sampler is uniform on the 5 minimal paths of a 4-cycle", criterion5);
    run(6, "longest-cycle power sums within 1e6 n^2 (n in {50,100})", criterion6);
    run(7, "expected time-to-halve within its bound (lambda = (60))", criterion7);
    run(8, "orthogonal counts and series bracketing (2n <= 8; N = 50)", criterion8);
    run(9, "worked coset-type examples reproduce (3,1) and (2,1,1)", criterion9);
    run(10, "loop-operator energy inequality in exact arithmetic (n <= 4)", criterion10);
    run(11, "small-class deviation and log bounds at pinned instances", criterion11);
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}

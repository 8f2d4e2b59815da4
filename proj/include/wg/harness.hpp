#pragma once

#include "wg/exact.hpp"
#include "wg/partition.hpp"
#include "wg/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wg {

// One certified inequality instance. `satisfied` means lhs <= rhs, decided in
// exact rational arithmetic whenever both sides are exact (irrational bounds
// are compared through their squares; the one logarithmic claim goes through
// outward-rounded 256-bit interval arithmetic). lhs/rhs strings hold exact
// "p/q" values for exact rows and shortest-round-trip decimals otherwise.
struct BoundCheckResult {
    std::string claim;
    int n = 0;
    std::string N;     // "" for rows with no evaluation point
    std::string label; // class / coset / vector label
    bool exact = false;
    std::string lhs;
    std::string rhs;
    double lhs_value = 0;
    double rhs_value = 0;
    bool hypothesis_met = true;
    bool satisfied = false;
    double slack_ratio = 0; // lhs / rhs, 0 when rhs is 0 or infinite
    std::string note;
};

// Upper bound ratio <= 1/(1 - C n^3 / N^2) with C = 6 sqrt(8) x 10^6 for every
// class of S_n (gate: N^4 >= 288e12 n^6), plus the classical lower bound
// N^2/(N^2 - (n-1)) <= ratio (gate: N^4 >= 36 n^7); ratio is
// N^{n+|s|} Wg(s) / Moeb(s), exact.
std::vector<BoundCheckResult> check_theorem_main(int n, const Rat &N);

// Orthogonal ratio (-1)^{|pi|} N^{n+|pi|} Wg^O(pi) / |Moeb(pi)| against
// 1/(1 - 10^6 n^{3/2} / N)^2 per coset class (gate N^2 >= 4e12 n^3), plus the
// inherited symplectic magnitude rows at the same N.
std::vector<BoundCheckResult> check_theorem_orthogonal(int n, const Rat &N);

// |N^{n+|s|} Wg - Moeb| <= sum_{g>=1} e^{|s|^2} (16 e g)^{|s|} |s|! x^g with
// x = 48 e^2 n^2 / N^2, summed in closed form through Eulerian polynomials and
// a 50-digit rational upper interval for e; gate N^2 > 48 e^2 n^2. Classes
// with norm <= norm_cap at every n <= nmax and every N in the schedule. The
// note column carries the empirically minimal constant.
std::vector<BoundCheckResult> check_small_perm(int nmax, int norm_cap,
                                               const std::vector<Rat> &N_schedule);

// log(N^{n+|s|} Wg / Moeb) <= 25 (n^{5/2}/N^2) |s| + log|s| + 2 for classes
// with norm >= 4 (gate 10^20 n^5 <= N^4); outward-rounded MPFR comparison.
std::vector<BoundCheckResult> check_log_bound(int n, const Rat &N);

// Exact single-defect ratios versus the Monte-Carlo-backed cycle bound and the
// absolute caps, including the orthogonal minor/major analogues (n <= 5).
std::vector<BoundCheckResult> check_path_ratio_bounds(int n, long samples = 2000,
                                                      std::uint64_t seed = 2024);

// Process statistics of WP(lambda): longest-cycle power sum, time-to-halve and
// the coupon-gap tail at (i, t), each against its proved bound (flagged
// vacuous when n <= 6 or L_0 < 6).
std::vector<BoundCheckResult> check_process(const Partition &lambda, long samples,
                                            std::uint64_t seed, int tail_i = 0, int tail_t = 20);

// One loop-operator application: ||Tx||_g <= (g + 12 n^{5/2}/N^2) ||x||_g + 1
// + n^2/(50 N^2) in exact arithmetic for the Wg vector and `random_vectors`
// seeded random rational vectors, for each gamma.
std::vector<BoundCheckResult> check_energy(int n, const Rat &N, const std::vector<Rat> &gammas,
                                           int random_vectors, std::uint64_t seed);

enum class ReportFormat { Csv, Json };

// Stable column order; exact rationals as "p/q" strings; lossless round trip.
void emit_report(const std::vector<BoundCheckResult> &results, std::ostream &out,
                 ReportFormat format);
std::string report_to_string(const std::vector<BoundCheckResult> &results, ReportFormat format);
std::vector<BoundCheckResult> parse_report(const std::string &text, ReportFormat format);

// Exit-code predicate: every hypothesis-met row satisfied.
bool all_met_pass(const std::vector<BoundCheckResult> &results);

// 50-digit rational interval for Euler's number, e_lo < e < e_hi.
const Rat &euler_lower();
const Rat &euler_upper();

} // namespace wg

#pragma once

#include "wg/pairing.hpp"
#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wg {

// One complete trajectory of a Weingarten process, from the initial state down
// to the empty state. Statistics are recorded at every time step t (including
// dashed transitions); index t runs over states, 0 <= t <= n + |start|.
//
//   level[t]       pivot n_t (degree / half-size); non-increasing
//   longest[t]     L_t: longest cycle (largest coset part); 0 at the end
//   pivot_len[t]   C_t: length of the cycle (part) holding the pivot; 0 at end
//   pivotal[t]     true when level[t] < level[t-1] (strict decrease)
//   solid_edge[s]  transition s -> s+1 kind; solid edges total |start|
struct ProcessTrace {
    bool orthogonal = false;
    std::vector<Permutation> perm_states;
    std::vector<Pairing> pair_states;
    std::vector<int> level;
    std::vector<int> longest;
    std::vector<int> pivot_len;
    std::vector<bool> pivotal;
    std::vector<bool> solid_edge;

    int time_steps() const { return static_cast<int>(level.size()) - 1; }
    int solid_count() const;
    // tau_m: first t with level[t] == level[0] - m.
    int pivotal_time(int m) const;
};

// One run of the unitary process: split the pivotal cycle (a_1 ... a_l k) at
// position j with probability Cat(j-1)Cat(l-j)/Cat(l) (sampled by exact
// big-integer thresholds), restrict when the pivot is fixed.
ProcessTrace run_wp_unitary(const Permutation &start, Rng &rng);
// Uniform class draw followed by the sigma process.
ProcessTrace run_wp_unitary(const Partition &lambda, Rng &rng);

// Orthogonal analogue: the component of 2n-1 walks as (2n-1, i_1, ...,
// i_{2m-1}); the split at i_{2j} is taken with probability
// Cat(j-1)Cat(m-j-1)/Cat(m-1), which the Catalan recursion makes a probability
// law and which is forced by uniformity over minimal paths.
ProcessTrace run_wp_orthogonal(const Pairing &start, Rng &rng);
ProcessTrace run_wp_orthogonal(const Partition &coset, Rng &rng);

// Exact probability that the process run from path.front() produces exactly
// this state sequence: the product of the Catalan split factors.
Rat path_probability(const std::vector<Permutation> &path);
Rat path_probability(const std::vector<Pairing> &path);

struct EstimatorReport {
    double estimate = 0;
    double std_error = 0; // sample stddev / sqrt(samples)
    long samples = 0;
    std::uint64_t seed = 0;
    bool hypotheses_met = true;
    std::string flag; // "bound-hypotheses-unmet" when the certified bound is vacuous
};

enum class PowerExponent { One, ThreeHalves };

// Monte Carlo estimate of E[ sum_t L_t^p ] under WP(lambda).
EstimatorReport estimate_L_power_sum(const Partition &lambda, PowerExponent p, long samples,
                                     std::uint64_t seed);

// T: first pivotal time at which no cycle of length >= (2/3) L_0 remains.
EstimatorReport estimate_time_to_halve(const Partition &lambda, long samples, std::uint64_t seed);

// P(T_{i+1} - T_i > 5t) for the coupon times T_i (next pivotal time after the
// count of cycles >= (2/3) L_0 drops to k-i).
EstimatorReport estimate_Ti_tail(const Partition &lambda, int i, int t, long samples,
                                 std::uint64_t seed);

// Trace statistic extraction shared with the harness / tests.
int time_to_halve(const ProcessTrace &trace);
int coupon_time(const ProcessTrace &trace, int i); // T_i
double L_power_sum(const ProcessTrace &trace, PowerExponent p);

// JSON lines, one step per line: {"t", "n", "state", "L", "C", "pivotal"}.
std::string trace_to_jsonl(const ProcessTrace &trace);
std::string report_to_json(const EstimatorReport &report);

} // namespace wg

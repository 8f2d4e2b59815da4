#include "wg/process.hpp"

#include "wg/catalan.hpp"
#include "wg/errors.hpp"

#include <json.hpp>

#include <cmath>

namespace wg {

int ProcessTrace::solid_count() const {
    int c = 0;
    for (bool s : solid_edge)
        c += s ? 1 : 0;
    return c;
}

int ProcessTrace::pivotal_time(int m) const {
    const int target = level.at(0) - m;
    for (size_t t = 0; t < level.size(); ++t)
        if (level[t] == target)
            return static_cast<int>(t);
    throw DomainError("pivotal_time: level " + std::to_string(target) + " never reached");
}

namespace {

// Index j in {1, ..., l} with probability Cat(j-1)Cat(l-j)/Cat(l), via exact
// cumulative thresholds against a uniform draw below Cat(l).
int sample_split_position(int l, Rng &rng) {
    if (l == 1)
        return 1;
    Int u = rng.below_big(catalan(l));
    Int acc = 0;
    for (int j = 1; j <= l; ++j) {
        acc += catalan(j - 1) * catalan(l - j);
        if (u < acc)
            return j;
    }
    throw std::logic_error("sample_split_position: thresholds did not cover Cat(l)");
}

struct UnitaryStats {
    int level;
    int longest;
    int pivot_len;
};

UnitaryStats unitary_stats(const Permutation &s) {
    const int k = s.degree();
    if (k == 0)
        return {0, 0, 0};
    int longest = 0;
    for (const auto &cyc : s.cycles())
        longest = std::max<int>(longest, static_cast<int>(cyc.size()));
    return {k, longest, static_cast<int>(s.cycle_through(k).size())};
}

struct OrthogonalStats {
    int level;
    int longest;
    int pivot_len;
};

OrthogonalStats orthogonal_stats(const Pairing &p) {
    const int k = p.half_size();
    if (k == 0)
        return {0, 0, 0};
    Partition coset = p.coset_type();
    int pivot_part = coset_walk(p).component_half_size();
    return {k, coset.largest(), pivot_part};
}

template <typename State, typename Stats>
void push_state(ProcessTrace &trace, std::vector<State> &states, const State &s,
                const Stats &st) {
    states.push_back(s);
    bool piv = !trace.level.empty() && st.level < trace.level.back();
    trace.level.push_back(st.level);
    trace.longest.push_back(st.longest);
    trace.pivot_len.push_back(st.pivot_len);
    trace.pivotal.push_back(piv);
}

} // namespace

ProcessTrace run_wp_unitary(const Permutation &start, Rng &rng) {
    ProcessTrace trace;
    trace.orthogonal = false;
    Permutation cur = start;
    push_state(trace, trace.perm_states, cur, unitary_stats(cur));
    while (cur.degree() > 0) {
        const int k = cur.degree();
        if (cur.fixes(k)) {
            cur = cur.restrict_top();
            trace.solid_edge.push_back(false);
        } else {
            std::vector<int> cycle = cur.cycle_through(k); // (a_1, ..., a_l, k)
            const int l = static_cast<int>(cycle.size()) - 1;
            int j = sample_split_position(l, rng);
            cur = compose(Permutation::transposition(k, cycle[j - 1], k), cur);
            trace.solid_edge.push_back(true);
        }
        push_state(trace, trace.perm_states, cur, unitary_stats(cur));
    }
    return trace;
}

ProcessTrace run_wp_unitary(const Partition &lambda, Rng &rng) {
    return run_wp_unitary(uniform_class_sample(lambda, rng), rng);
}

ProcessTrace run_wp_orthogonal(const Pairing &start, Rng &rng) {
    ProcessTrace trace;
    trace.orthogonal = true;
    Pairing cur = start;
    push_state(trace, trace.pair_states, cur, orthogonal_stats(cur));
    while (cur.half_size() > 0) {
        if (cur.has_top_pair()) {
            cur = cur.remove_top_pair();
            trace.solid_edge.push_back(false);
        } else {
            CosetWalk walk = coset_walk(cur);
            const int m = walk.component_half_size();
            int j = sample_split_position(m - 1, rng);
            cur = cur.act_transposition(walk.vertices[2 * j], cur.points() - 1);
            trace.solid_edge.push_back(true);
        }
        push_state(trace, trace.pair_states, cur, orthogonal_stats(cur));
    }
    return trace;
}

ProcessTrace run_wp_orthogonal(const Partition &coset, Rng &rng) {
    return run_wp_orthogonal(uniform_coset_sample(coset, rng), rng);
}

Rat path_probability(const std::vector<Permutation> &path) {
    Rat prob = 1;
    for (size_t s = 0; s + 1 < path.size(); ++s) {
        const Permutation &cur = path[s];
        const Permutation &next = path[s + 1];
        const int k = cur.degree();
        if (next.degree() < k)
            continue; // dashed step, probability 1 (forced)
        std::vector<int> cycle = cur.cycle_through(k);
        const int l = static_cast<int>(cycle.size()) - 1;
        int j = 0;
        for (int cand = 1; cand <= l; ++cand) {
            if (compose(Permutation::transposition(k, cycle[cand - 1], k), cur) == next) {
                j = cand;
                break;
            }
        }
        if (j == 0)
            throw DomainError("path_probability: step " + std::to_string(s) +
                              " is not a process transition");
        Rat factor(catalan(j - 1) * catalan(l - j), catalan(l));
        factor.canonicalize();
        prob *= factor;
    }
    prob.canonicalize();
    return prob;
}

Rat path_probability(const std::vector<Pairing> &path) {
    Rat prob = 1;
    for (size_t s = 0; s + 1 < path.size(); ++s) {
        const Pairing &cur = path[s];
        const Pairing &next = path[s + 1];
        if (next.half_size() < cur.half_size())
            continue;
        CosetWalk walk = coset_walk(cur);
        const int m = walk.component_half_size();
        int j = 0;
        for (int cand = 1; cand <= m - 1; ++cand) {
            if (cur.act_transposition(walk.vertices[2 * cand], cur.points() - 1) == next) {
                j = cand;
                break;
            }
        }
        if (j == 0)
            throw DomainError("path_probability: step " + std::to_string(s) +
                              " is not a process transition");
        Rat factor(catalan(j - 1) * catalan(m - 1 - j), catalan(m - 1));
        factor.canonicalize();
        prob *= factor;
    }
    prob.canonicalize();
    return prob;
}

int time_to_halve(const ProcessTrace &trace) {
    const int L0 = trace.longest.at(0);
    for (size_t t = 1; t < trace.level.size(); ++t)
        if (trace.pivotal[t] && 3 * trace.longest[t] < 2 * L0)
            return static_cast<int>(t);
    throw DomainError("time_to_halve: trace never crossed the threshold");
}

namespace {

int count_large(const std::vector<int> &cycle_lengths, int L0) {
    int c = 0;
    for (int len : cycle_lengths)
        if (3 * len >= 2 * L0)
            ++c;
    return c;
}

std::vector<int> state_cycle_lengths(const ProcessTrace &trace, size_t t) {
    std::vector<int> lens;
    if (trace.orthogonal) {
        Partition coset = trace.pair_states[t].coset_type();
        for (int part : coset.parts())
            lens.push_back(part);
    } else {
        for (const auto &cyc : trace.perm_states[t].cycles())
            lens.push_back(static_cast<int>(cyc.size()));
    }
    return lens;
}

} // namespace

int coupon_time(const ProcessTrace &trace, int i) {
    const int L0 = trace.longest.at(0);
    const int k = count_large(state_cycle_lengths(trace, 0), L0);
    if (i > k)
        throw DomainError("coupon_time: only " + std::to_string(k) + " large cycles at start");
    // t_i: first time the count of large cycles reaches k - i
    size_t ti = trace.level.size();
    for (size_t t = 0; t < trace.level.size(); ++t) {
        if (count_large(state_cycle_lengths(trace, t), L0) <= k - i) {
            ti = t;
            break;
        }
    }
    if (ti == trace.level.size())
        throw DomainError("coupon_time: count never dropped to k-i");
    // T_i: first pivotal time >= t_i (t = 0 counts as pivotal)
    for (size_t t = ti; t < trace.level.size(); ++t)
        if (t == 0 || trace.pivotal[t])
            return static_cast<int>(t);
    throw DomainError("coupon_time: no pivotal time after t_i");
}

double L_power_sum(const ProcessTrace &trace, PowerExponent p) {
    double acc = 0;
    for (int L : trace.longest) {
        double v = static_cast<double>(L);
        acc += (p == PowerExponent::One) ? v : v * std::sqrt(v);
    }
    return acc;
}

namespace {

EstimatorReport summarize(const std::vector<double> &values, std::uint64_t seed) {
    EstimatorReport rep;
    rep.samples = static_cast<long>(values.size());
    rep.seed = seed;
    double mean = 0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0;
    for (double v : values)
        var += (v - mean) * (v - mean);
    var = values.size() > 1 ? var / static_cast<double>(values.size() - 1) : 0.0;
    rep.estimate = mean;
    rep.std_error = std::sqrt(var / static_cast<double>(values.size()));
    return rep;
}

void flag_degenerate(EstimatorReport &rep, const Partition &lambda) {
    if (lambda.size() <= 6 || lambda.largest() < 6) {
        rep.hypotheses_met = false;
        rep.flag = "bound-hypotheses-unmet";
    }
}

} // namespace

EstimatorReport estimate_L_power_sum(const Partition &lambda, PowerExponent p, long samples,
                                     std::uint64_t seed) {
    if (samples < 1)
        throw DomainError("estimate_L_power_sum: samples must be >= 1");
    std::vector<double> values;
    values.reserve(static_cast<size_t>(samples));
    for (long run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(run));
        values.push_back(L_power_sum(run_wp_unitary(lambda, rng), p));
    }
    return summarize(values, seed);
}

EstimatorReport estimate_time_to_halve(const Partition &lambda, long samples,
                                       std::uint64_t seed) {
    if (samples < 1)
        throw DomainError("estimate_time_to_halve: samples must be >= 1");
    std::vector<double> values;
    values.reserve(static_cast<size_t>(samples));
    for (long run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(run));
        values.push_back(static_cast<double>(time_to_halve(run_wp_unitary(lambda, rng))));
    }
    EstimatorReport rep = summarize(values, seed);
    flag_degenerate(rep, lambda);
    return rep;
}

EstimatorReport estimate_Ti_tail(const Partition &lambda, int i, int t, long samples,
                                 std::uint64_t seed) {
    if (samples < 1)
        throw DomainError("estimate_Ti_tail: samples must be >= 1");
    const int L0 = lambda.largest();
    int k = 0;
    for (int part : lambda.parts())
        if (3 * part >= 2 * L0)
            ++k;
    if (k < i + 1)
        throw DomainError("estimate_Ti_tail: lambda has only " + std::to_string(k) +
                          " parts >= (2/3) L_0, need " + std::to_string(i + 1));
    std::vector<double> values;
    values.reserve(static_cast<size_t>(samples));
    for (long run = 0; run < samples; ++run) {
        Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(run));
        ProcessTrace trace = run_wp_unitary(lambda, rng);
        int gap = coupon_time(trace, i + 1) - coupon_time(trace, i);
        values.push_back(gap > 5 * t ? 1.0 : 0.0);
    }
    EstimatorReport rep = summarize(values, seed);
    flag_degenerate(rep, lambda);
    return rep;
}

std::string trace_to_jsonl(const ProcessTrace &trace) {
    std::string out;
    for (size_t t = 0; t < trace.level.size(); ++t) {
        nlohmann::ordered_json row;
        row["t"] = t;
        row["n"] = trace.level[t];
        row["state"] = trace.orthogonal ? to_string(trace.pair_states[t])
                                        : to_cycle_string(trace.perm_states[t]);
        row["L"] = trace.longest[t];
        row["C"] = trace.pivot_len[t];
        row["pivotal"] = static_cast<bool>(trace.pivotal[t]);
        out += row.dump();
        out += '\n';
    }
    return out;
}

std::string report_to_json(const EstimatorReport &report) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["estimate"] = report.estimate;
    j["std_error"] = report.std_error;
    j["hypotheses_met"] = report.hypotheses_met;
    j["flag"] = report.flag;
    return j.dump(2);
}

} // namespace wg

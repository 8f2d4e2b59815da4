#include "wg/exact.hpp"

#include "wg/catalan.hpp"
#include "wg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wg {

namespace {

constexpr int kGramCapU = 7;
constexpr int kGramCapOHalf = 4; // 2n <= 8
constexpr int kRecursionCap = 30;

// Exact dense solve by Gaussian elimination over the rationals; throws
// SingularError when no nonzero pivot remains.
std::vector<Rat> solve_dense(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                             const char *what) {
    const size_t m = a.size();
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m)
            throw SingularError(std::string(what) + ": singular system at column " +
                                std::to_string(col));
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t row = col + 1; row < m; ++row) {
            if (a[row][col] == 0)
                continue;
            Rat f = a[row][col] / a[col][col];
            for (size_t j = col; j < m; ++j)
                a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rat> x(m);
    for (size_t i = m; i-- > 0;) {
        Rat acc = b[i];
        for (size_t j = i + 1; j < m; ++j)
            acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
        x[i].canonicalize();
    }
    return x;
}

Rat pow_rat(const Rat &base, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

} // namespace

std::string group_name(MatrixGroup g) {
    switch (g) {
    case MatrixGroup::Unitary:
        return "U";
    case MatrixGroup::Orthogonal:
        return "O";
    case MatrixGroup::Symplectic:
        return "SP";
    }
    return "?";
}

MatrixGroup parse_group(const std::string &name) {
    if (name == "U" || name == "u")
        return MatrixGroup::Unitary;
    if (name == "O" || name == "o")
        return MatrixGroup::Orthogonal;
    if (name == "SP" || name == "sp" || name == "Sp")
        return MatrixGroup::Symplectic;
    throw ParseError("group: expected U, O or SP, got '" + name + "'");
}

const Rat &WgTable::value(const Partition &klass) const {
    int k = klass.size();
    if (k < 0 || k > n)
        throw DomainError("WgTable: level " + std::to_string(k) + " outside table");
    auto it = levels[k].find(klass);
    if (it == levels[k].end())
        throw DomainError("WgTable: class " + to_string(klass) + " missing");
    return it->second;
}

const Rat &WgTable::identity_value(int k) const {
    std::vector<int> ones(k, 1);
    return value(Partition(ones));
}

WgTable wg_unitary_recursion(int n, const Rat &N) {
    if (n > kRecursionCap)
        throw CapError("wg_unitary_recursion: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(kRecursionCap));
    if (N == 0)
        throw SingularError("wg_unitary_recursion: N = 0");
    WgTable table{MatrixGroup::Unitary, N, n, {}};
    table.levels.resize(n + 1);
    table.levels[0][Partition()] = 1;
    const Rat invN = Rat(1) / N;
    for (int k = 1; k <= n; ++k) {
        std::vector<Partition> classes = partitions_of(k);
        std::map<Partition, size_t> index;
        for (size_t i = 0; i < classes.size(); ++i)
            index[classes[i]] = i;
        const size_t m = classes.size();
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
        std::vector<Rat> b(m, Rat(0));
        for (size_t r = 0; r < m; ++r) {
            a[r][r] = 1;
            Permutation rep = class_representative(classes[r]);
            for (int i = 1; i < k; ++i) {
                Partition mu =
                    compose(Permutation::transposition(k, i, k), rep).cycle_type();
                a[r][index[mu]] += invN;
            }
            if (classes[r].all_ones())
                b[r] = invN * table.identity_value(k - 1);
        }
        std::vector<Rat> x = solve_dense(std::move(a), std::move(b), "wg_unitary_recursion");
        for (size_t i = 0; i < m; ++i)
            table.levels[k][classes[i]] = x[i];
    }
    return table;
}

WgTable wg_unitary_gram(int n, const Rat &N) {
    if (n > kGramCapU)
        throw CapError("wg_unitary_gram: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(kGramCapU));
    if (N == 0)
        throw SingularError("wg_unitary_gram: N = 0");
    WgTable table{MatrixGroup::Unitary, N, n, {}};
    table.levels.resize(n + 1);
    table.levels[0][Partition()] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<Partition> classes = partitions_of(k);
        std::map<Partition, size_t> index;
        for (size_t i = 0; i < classes.size(); ++i)
            index[classes[i]] = i;
        std::vector<Rat> npow(k + 1);
        npow[0] = 1;
        for (int e = 1; e <= k; ++e)
            npow[e] = npow[e - 1] * N;
        const size_t m = classes.size();
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
        std::vector<Rat> b(m, Rat(0));
        std::vector<Permutation> inv_reps;
        inv_reps.reserve(m);
        for (const Partition &lambda : classes)
            inv_reps.push_back(class_representative(lambda).inverse());
        // aggregate the full convolution system over the columns' classes
        std::vector<int> one_line(k);
        std::iota(one_line.begin(), one_line.end(), 1);
        do {
            Permutation tau{std::vector<int>(one_line)};
            size_t col = index[tau.cycle_type()];
            for (size_t r = 0; r < m; ++r) {
                int cycles = static_cast<int>(compose(inv_reps[r], tau).cycles().size());
                a[r][col] += npow[cycles];
            }
        } while (std::next_permutation(one_line.begin(), one_line.end()));
        b[index[Partition(std::vector<int>(k, 1))]] = 1;
        std::vector<Rat> x = solve_dense(std::move(a), std::move(b), "wg_unitary_gram");
        for (size_t i = 0; i < m; ++i)
            table.levels[k][classes[i]] = x[i];
    }
    return table;
}

Rat wg_full_cycle(int n, const Rat &N) {
    if (n < 1)
        throw DomainError("wg_full_cycle: n must be >= 1");
    Rat denom = 1;
    for (int j = -(n - 1); j <= n - 1; ++j) {
        Rat factor = N + j;
        if (factor == 0)
            throw DomainError("wg_full_cycle: pole at N = " + std::to_string(-j));
        denom *= factor;
    }
    Rat value(catalan(n - 1), 1);
    if ((n - 1) % 2 != 0)
        value = -value;
    value /= denom;
    value.canonicalize();
    return value;
}

namespace {

int union_loops(const Pairing &pi, const Pairing &rho) {
    const int m = pi.points();
    std::vector<int> up(m + 1);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
        while (up[x] != x) {
            up[x] = up[up[x]];
            x = up[x];
        }
        return x;
    };
    auto join = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y)
            up[x] = y;
    };
    for (int v = 1; v <= m; ++v) {
        join(v, pi.partner(v));
        join(v, rho.partner(v));
    }
    int loops = 0;
    for (int v = 1; v <= m; ++v)
        if (find(v) == v)
            ++loops;
    return loops;
}

} // namespace

WgTable wg_orthogonal_gram(int n, const Rat &N) {
    if (n > kGramCapOHalf)
        throw CapError("wg_orthogonal_gram: 2n = " + std::to_string(2 * n) + " exceeds cap " +
                       std::to_string(2 * kGramCapOHalf));
    if (N == 0)
        throw SingularError("wg_orthogonal_gram: N = 0");
    WgTable table{MatrixGroup::Orthogonal, N, n, {}};
    table.levels.resize(n + 1);
    table.levels[0][Partition()] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<Partition> cosets = partitions_of(k);
        std::map<Partition, size_t> index;
        for (size_t i = 0; i < cosets.size(); ++i)
            index[cosets[i]] = i;
        std::vector<Rat> npow(k + 1);
        npow[0] = 1;
        for (int e = 1; e <= k; ++e)
            npow[e] = npow[e - 1] * N;
        const size_t m = cosets.size();
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
        std::vector<Rat> b(m, Rat(0));
        std::vector<Pairing> reps;
        reps.reserve(m);
        for (const Partition &mu : cosets)
            reps.push_back(template_pairing(mu));
        for (const Pairing &rho : all_pairings(k)) {
            size_t col = index[rho.coset_type()];
            for (size_t r = 0; r < m; ++r)
                a[r][col] += npow[union_loops(reps[r], rho)];
        }
        b[index[Partition(std::vector<int>(k, 1))]] = 1;
        std::vector<Rat> x = solve_dense(std::move(a), std::move(b), "wg_orthogonal_gram");
        for (size_t i = 0; i < m; ++i)
            table.levels[k][cosets[i]] = x[i];
    }
    return table;
}

WgTable wg_symplectic_magnitudes(int n, const Int &N) {
    if (N <= 0)
        throw DomainError("wg_symplectic_magnitudes: N must be a positive integer");
    WgTable table = wg_orthogonal_gram(n, Rat(2 * N));
    table.group = MatrixGroup::Symplectic;
    table.N = Rat(N);
    for (auto &level : table.levels)
        for (auto &[klass, value] : level)
            value = abs(value);
    return table;
}

SeriesApproximation wg_unitary_series(const Permutation &sigma, const Rat &N, int g_max,
                                      GraphCaps caps) {
    const int n = sigma.degree();
    const Rat q = Rat(4 * n * n) / (N * N);
    if (q >= 1)
        throw DomainError("wg_unitary_series: need N^2 > 4n^2 for the geometric tail");
    UnitaryPathCounter counter(caps);
    SeriesApproximation out;
    out.partial = 0;
    const Rat invN2 = Rat(1) / (N * N);
    Rat weight = 1;
    for (int g = 0; g <= g_max; ++g) {
        out.partial += Rat(counter.count(sigma, g)) * weight;
        weight *= invN2;
    }
    out.partial.canonicalize();
    // trivial cap (2n)^{n+|sigma|+2g} summed over g > g_max
    Rat cap = pow_rat(Rat(2 * n), n + sigma.norm());
    out.tail = cap * pow_rat(q, g_max + 1) / (1 - q);
    out.tail.canonicalize();
    return out;
}

SeriesApproximation wg_orthogonal_series(const Pairing &pi, const Rat &N, int g_max,
                                         GraphCaps caps) {
    const int n = pi.half_size();
    const Rat q = Rat(2 * n) / N;
    if (q >= 1)
        throw DomainError("wg_orthogonal_series: need N > 2n for the geometric tail");
    OrthogonalPathCounter counter(caps);
    SeriesApproximation out;
    out.partial = 0;
    const Rat invN = Rat(1) / N;
    for (int g = 0; g <= g_max; ++g) {
        Int signed_count = 0;
        for (int g2 = 0; 2 * g2 <= g; ++g2) {
            int g1 = g - 2 * g2;
            Int c = counter.count(pi, g1, g2);
            signed_count += (g1 % 2 == 0) ? c : -c;
        }
        out.partial += Rat(signed_count) * pow_rat(invN, g);
    }
    out.partial.canonicalize();
    Rat cap = pow_rat(Rat(2 * n), n + pi.norm());
    out.tail = cap * pow_rat(q, g_max + 1) / (1 - q);
    out.tail.canonicalize();
    return out;
}

Rat ClassVector::at(const Partition &p) const {
    auto it = entries.find(p);
    return it == entries.end() ? Rat(0) : it->second;
}

ClassVector table_to_class_vector(const WgTable &table) {
    ClassVector x;
    x.n = table.n;
    for (int k = 0; k <= table.n; ++k)
        for (const auto &[klass, value] : table.levels[k])
            x.entries[klass] = value;
    return x;
}

Rat gamma_norm(const ClassVector &x, const Rat &gamma, const Rat &N) {
    if (gamma <= 0)
        throw DomainError("gamma_norm: gamma must be positive");
    Rat best = 0;
    for (int r = 1; r <= x.n; ++r) {
        for (const Partition &lambda : partitions_of(r)) {
            Rat v = abs(x.at(lambda));
            if (v == 0)
                continue;
            int nrm = lambda.norm();
            Rat weighted =
                pow_rat(N, r + nrm) * pow_rat(gamma, nrm) / Rat(moebius_abs(lambda)) * v;
            if (weighted > best)
                best = weighted;
        }
    }
    Rat out = abs(x.at(Partition())) + best;
    out.canonicalize();
    return out;
}

ClassVector apply_loop_operator(const ClassVector &x, const WgTable &table) {
    const Rat &N = table.N;
    const Rat invN = Rat(1) / N;
    ClassVector y;
    y.n = x.n;
    y.set(Partition(), x.at(Partition()));
    for (int k = 1; k <= x.n; ++k) {
        for (const Partition &lambda : partitions_of(k)) {
            Rat acc = 0;
            if (lambda.all_ones())
                acc = invN * table.identity_value(k - 1);
            Permutation rep = class_representative(lambda);
            for (int i = 1; i < k; ++i) {
                Partition mu =
                    compose(Permutation::transposition(k, i, k), rep).cycle_type();
                acc -= invN * x.at(mu);
            }
            acc.canonicalize();
            y.set(lambda, acc);
        }
    }
    return y;
}

std::string table_to_json(const WgTable &table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int k = 0; k <= table.n; ++k) {
        for (const Partition &klass : partitions_of(k)) {
            nlohmann::ordered_json row;
            row["group"] = group_name(table.group);
            row["N"] = rat_to_string(table.N);
            row["level"] = k;
            row["partition"] = to_string(klass);
            row["value"] = rat_to_string(table.levels[k].at(klass));
            if (table.group == MatrixGroup::Symplectic)
                row["sign"] = "±";
            rows.push_back(std::move(row));
        }
    }
    return rows.dump(2);
}

WgTable table_from_json(const std::string &text) {
    nlohmann::json rows = nlohmann::json::parse(text);
    if (!rows.is_array() || rows.empty())
        throw ParseError("table_from_json: expected a non-empty array");
    WgTable table;
    table.group = parse_group(rows[0].at("group").get<std::string>());
    table.N = parse_rational(rows[0].at("N").get<std::string>());
    int max_level = 0;
    for (const auto &row : rows)
        max_level = std::max(max_level, row.at("level").get<int>());
    table.n = max_level;
    table.levels.resize(max_level + 1);
    for (const auto &row : rows) {
        int level = row.at("level").get<int>();
        Partition klass = parse_partition(row.at("partition").get<std::string>());
        if (klass.size() != level)
            throw ParseError("table_from_json: partition/level mismatch");
        table.levels[level][klass] = parse_rational(row.at("value").get<std::string>());
    }
    return table;
}

} // namespace wg

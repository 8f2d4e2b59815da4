#include "wg/graph.hpp"

#include "wg/catalan.hpp"
#include "wg/errors.hpp"

#include <sstream>

namespace wg {

std::vector<UnitarySuccessor> unitary_successors(const Permutation &sigma) {
    const int k = sigma.degree();
    std::vector<UnitarySuccessor> out;
    if (k == 0)
        return out;
    for (int i = 1; i < k; ++i)
        out.push_back({false, i, compose(Permutation::transposition(k, i, k), sigma)});
    if (sigma.fixes(k))
        out.push_back({true, 0, sigma.restrict_top()});
    return out;
}

std::vector<OrthogonalSuccessor> orthogonal_successors(const Pairing &pi) {
    const int points = pi.points();
    std::vector<OrthogonalSuccessor> out;
    if (points == 0)
        return out;
    const int before = pi.coset_type().length();
    for (int i = 1; i <= points - 2; ++i) {
        Pairing next = pi.act_transposition(i, points - 1);
        int delta = next.coset_type().length() - before;
        OrthEdgeKind kind = delta == 1   ? OrthEdgeKind::Split
                            : delta == 0 ? OrthEdgeKind::Minor
                                         : OrthEdgeKind::Major;
        out.push_back({kind, i, std::move(next)});
    }
    if (pi.has_top_pair())
        out.push_back({OrthEdgeKind::Dashed, 0, pi.remove_top_pair()});
    return out;
}

Int UnitaryPathCounter::count(const Permutation &sigma, int g) {
    if (g < 0)
        throw DomainError("count_paths_unitary: negative g");
    return count_solid(sigma, sigma.norm() + 2 * g);
}

Int UnitaryPathCounter::count_solid(const Permutation &sigma, int solid) {
    const int k = sigma.degree();
    if (k > caps_.max_unitary_degree)
        throw CapError("count_paths_unitary: degree " + std::to_string(k) + " exceeds cap " +
                       std::to_string(caps_.max_unitary_degree));
    if (solid > caps_.max_solid_budget)
        throw CapError("count_paths_unitary: solid budget " + std::to_string(solid) +
                       " exceeds cap " + std::to_string(caps_.max_solid_budget));
    if (solid < 0)
        return 0;
    if (k == 0)
        return solid == 0 ? Int(1) : Int(0);
    const int norm = sigma.norm();
    if (solid < norm || (solid - norm) % 2 != 0)
        return 0;
    auto key = std::make_pair(sigma.one_line(), solid);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    Int total = 0;
    if (sigma.fixes(k))
        total += count_solid(sigma.restrict_top(), solid);
    if (solid > 0)
        for (int i = 1; i < k; ++i)
            total += count_solid(compose(Permutation::transposition(k, i, k), sigma), solid - 1);
    memo_.emplace(std::move(key), total);
    return total;
}

Int OrthogonalPathCounter::count(const Pairing &pi, int g1, int g2) {
    if (g1 < 0 || g2 < 0)
        return 0;
    const int k = pi.half_size();
    if (k > caps_.max_orthogonal_half)
        throw CapError("count_paths_orthogonal: 2n = " + std::to_string(2 * k) + " exceeds cap " +
                       std::to_string(2 * caps_.max_orthogonal_half));
    if (pi.norm() + g1 + 2 * g2 > caps_.max_solid_budget)
        throw CapError("count_paths_orthogonal: solid budget exceeds cap");
    if (k == 0)
        return (g1 == 0 && g2 == 0) ? Int(1) : Int(0);
    Key key{pi.partners(), g1, g2};
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    Int total = 0;
    const int before = pi.coset_type().length();
    const int points = pi.points();
    if (pi.has_top_pair())
        total += count(pi.remove_top_pair(), g1, g2);
    for (int i = 1; i <= points - 2; ++i) {
        Pairing next = pi.act_transposition(i, points - 1);
        int delta = next.coset_type().length() - before;
        if (delta == 1)
            total += count(next, g1, g2);
        else if (delta == 0)
            total += count(next, g1 - 1, g2);
        else
            total += count(next, g1, g2 - 1);
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Int count_paths_unitary(const Permutation &sigma, int g, GraphCaps caps) {
    UnitaryPathCounter counter(caps);
    return counter.count(sigma, g);
}

Int count_paths_unitary(const Partition &lambda, int g, GraphCaps caps) {
    return count_paths_unitary(class_representative(lambda), g, caps);
}

Int count_paths_orthogonal(const Pairing &pi, int g1, int g2, GraphCaps caps) {
    OrthogonalPathCounter counter(caps);
    return counter.count(pi, g1, g2);
}

Int count_paths_orthogonal(const Partition &coset, int g1, int g2, GraphCaps caps) {
    return count_paths_orthogonal(template_pairing(coset), g1, g2, caps);
}

Rat single_defect_ratio(const Partition &lambda, GraphCaps caps) {
    if (lambda.size() == 0)
        throw DomainError("single_defect_ratio: empty partition");
    UnitaryPathCounter counter(caps);
    Permutation rep = class_representative(lambda);
    Int base = counter.count(rep, 0); // |Moeb| > 0, never zero
    Rat ratio(counter.count(rep, 1), base);
    ratio.canonicalize();
    return ratio;
}

namespace {

void extend_paths_u(std::vector<std::vector<Permutation>> &out, std::vector<Permutation> &path,
                    int solid_left) {
    const Permutation cur = path.back(); // copy: push_back below may reallocate
    const int k = cur.degree();
    if (k == 0) {
        if (solid_left == 0)
            out.push_back(path);
        return;
    }
    if (solid_left < cur.norm())
        return;
    if (cur.fixes(k)) {
        path.push_back(cur.restrict_top());
        extend_paths_u(out, path, solid_left);
        path.pop_back();
    }
    if (solid_left > 0) {
        for (int i = 1; i < k; ++i) {
            path.push_back(compose(Permutation::transposition(k, i, k), cur));
            extend_paths_u(out, path, solid_left - 1);
            path.pop_back();
        }
    }
}

void extend_paths_o(std::vector<std::vector<Pairing>> &out, std::vector<Pairing> &path) {
    const Pairing cur = path.back(); // copy: push_back below may reallocate
    const int k = cur.half_size();
    if (k == 0) {
        out.push_back(path);
        return;
    }
    if (cur.has_top_pair()) {
        path.push_back(cur.remove_top_pair());
        extend_paths_o(out, path);
        path.pop_back();
    }
    // minimal paths only follow splitting solid edges
    const int before = cur.coset_type().length();
    for (int i = 1; i <= cur.points() - 2; ++i) {
        Pairing next = cur.act_transposition(i, cur.points() - 1);
        if (next.coset_type().length() == before + 1) {
            path.push_back(std::move(next));
            extend_paths_o(out, path);
            path.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<Permutation>> enumerate_minimal_paths(const Permutation &sigma) {
    std::vector<std::vector<Permutation>> out;
    std::vector<Permutation> path{sigma};
    extend_paths_u(out, path, sigma.norm());
    return out;
}

std::vector<std::vector<Pairing>> enumerate_minimal_paths(const Pairing &pi) {
    std::vector<std::vector<Pairing>> out;
    std::vector<Pairing> path{pi};
    extend_paths_o(out, path);
    return out;
}

std::string unitary_counts_csv(int n, int g_max, GraphCaps caps) {
    UnitaryPathCounter counter(caps);
    std::ostringstream out;
    out << "class,g,count\n";
    for (const Partition &lambda : partitions_of(n)) {
        Permutation rep = class_representative(lambda);
        for (int g = 0; g <= g_max; ++g)
            out << '"' << to_string(lambda) << "\"," << g << ',' << counter.count(rep, g).get_str()
                << '\n';
    }
    return out.str();
}

std::string orthogonal_counts_csv(int n, int g1_max, int g2_max, GraphCaps caps) {
    OrthogonalPathCounter counter(caps);
    std::ostringstream out;
    out << "coset,g1,g2,count\n";
    for (const Partition &mu : partitions_of(n)) {
        Pairing rep = template_pairing(mu);
        for (int g1 = 0; g1 <= g1_max; ++g1)
            for (int g2 = 0; g2 <= g2_max; ++g2)
                out << '"' << to_string(mu) << "\"," << g1 << ',' << g2 << ','
                    << counter.count(rep, g1, g2).get_str() << '\n';
    }
    return out.str();
}

} // namespace wg

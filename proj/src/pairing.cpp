#include "wg/pairing.hpp"

#include "wg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wg {

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
    const int m = static_cast<int>(partner_.size());
    if (m % 2 != 0)
        throw DomainError("pairing: array length must be even");
    for (int k = 1; k <= m; ++k) {
        int p = partner_[k - 1];
        if (p < 1 || p > m)
            throw DomainError("pairing: partner of " + std::to_string(k) + " is " +
                              std::to_string(p) + ", outside [1," + std::to_string(m) + "]");
        if (p == k)
            throw DomainError("pairing: " + std::to_string(k) + " is paired with itself");
        if (partner_[p - 1] != k)
            throw DomainError("pairing: partner map is not an involution at " + std::to_string(k));
    }
}

Pairing Pairing::canonical(int n) {
    std::vector<int> partner(2 * n);
    for (int i = 1; i <= n; ++i) {
        partner[2 * i - 2] = 2 * i;
        partner[2 * i - 1] = 2 * i - 1;
    }
    Pairing p;
    p.partner_ = std::move(partner);
    return p;
}

Pairing Pairing::act_transposition(int a, int b) const {
    const int m = points();
    if (a < 1 || b < 1 || a > m || b > m || a == b)
        throw DomainError("pairing: transposition (" + std::to_string(a) + "," +
                          std::to_string(b) + ") out of range");
    auto tau = [&](int k) { return k == a ? b : (k == b ? a : k); };
    std::vector<int> out(m);
    for (int k = 1; k <= m; ++k)
        out[tau(k) - 1] = tau(partner_[k - 1]);
    Pairing p;
    p.partner_ = std::move(out);
    return p;
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= points(); ++k)
        if (k < partner_[k - 1])
            out.emplace_back(k, partner_[k - 1]);
    return out;
}

namespace {

int uf_find(std::vector<int> &up, int x) {
    while (up[x] != x) {
        up[x] = up[up[x]];
        x = up[x];
    }
    return x;
}

void uf_union(std::vector<int> &up, int a, int b) {
    a = uf_find(up, a);
    b = uf_find(up, b);
    if (a != b)
        up[a] = b;
}

} // namespace

Partition Pairing::coset_type() const {
    const int m = points();
    std::vector<int> up(m + 1);
    std::iota(up.begin(), up.end(), 0);
    for (int i = 1; 2 * i <= m; ++i)
        uf_union(up, 2 * i - 1, 2 * i);
    for (int k = 1; k <= m; ++k)
        uf_union(up, k, partner_[k - 1]);
    std::vector<int> size(m + 1, 0);
    for (int k = 1; k <= m; ++k)
        ++size[uf_find(up, k)];
    std::vector<int> parts;
    for (int k = 1; k <= m; ++k)
        if (size[k] > 0)
            parts.push_back(size[k] / 2);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

bool Pairing::has_top_pair() const {
    return points() >= 2 && partner_[points() - 2] == points();
}

Pairing Pairing::remove_top_pair() const {
    if (!has_top_pair())
        throw DomainError("remove_top_pair: pairing lacks the pair {2n-1, 2n}");
    Pairing p;
    p.partner_.assign(partner_.begin(), partner_.end() - 2);
    return p;
}

CosetWalk coset_walk(const Pairing &pi) {
    const int top = pi.points() - 1; // 2n - 1
    if (top < 1)
        throw DomainError("coset_walk: empty pairing");
    auto blue = [](int k) { return k % 2 == 1 ? k + 1 : k - 1; };
    CosetWalk walk;
    walk.vertices.push_back(top);
    int cur = pi.partner(top); // red step first
    while (cur != top) {
        walk.vertices.push_back(cur);
        cur = blue(cur);
        if (cur == top)
            break;
        walk.vertices.push_back(cur);
        cur = pi.partner(cur);
    }
    return walk;
}

std::vector<SplitTarget> split_targets(const Pairing &pi) {
    if (pi.has_top_pair())
        return {}; // component of size 2: nothing to split
    CosetWalk walk = coset_walk(pi);
    const int m = walk.component_half_size();
    std::vector<SplitTarget> out;
    for (int j = 1; j <= m - 1; ++j)
        out.push_back(SplitTarget{walk.vertices[2 * j], j, m - j});
    return out;
}

Pairing parse_pairing(const std::string &text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw ParseError("pairing: expected digit at position " + std::to_string(i));
        return std::stoi(text.substr(start, i - start));
    };
    skip_ws();
    if (i == text.size() || text[i] != '{')
        throw ParseError("pairing: expected '{' at position " + std::to_string(i));
    ++i;
    std::vector<std::pair<int, int>> pairs;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        for (;;) {
            int a = read_int();
            skip_ws();
            if (i == text.size() || text[i] != '-')
                throw ParseError("pairing: expected '-' at position " + std::to_string(i));
            ++i;
            int b = read_int();
            pairs.emplace_back(a, b);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == '}') {
                ++i;
                break;
            }
            throw ParseError("pairing: expected ',' or '}' at position " + std::to_string(i));
        }
    }
    skip_ws();
    if (i != text.size())
        throw ParseError("pairing: trailing characters at position " + std::to_string(i));
    const int m = 2 * static_cast<int>(pairs.size());
    std::vector<int> partner(m, 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > m || b < 1 || b > m)
            throw ParseError("pairing: entry outside [1," + std::to_string(m) + "]");
        if (partner[a - 1] || partner[b - 1] || a == b)
            throw ParseError("pairing: element " + std::to_string(partner[a - 1] ? a : b) +
                             " used twice");
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    try {
        return Pairing(std::move(partner));
    } catch (const DomainError &e) {
        throw ParseError(std::string("pairing: ") + e.what());
    }
}

std::string to_string(const Pairing &pi) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto [a, b] : pi.pairs()) {
        if (!first)
            out << ", ";
        first = false;
        out << a << '-' << b;
    }
    out << '}';
    return out.str();
}

namespace {

void extend_pairings(std::vector<Pairing> &out, std::vector<int> &partner, int m) {
    int first = 0;
    for (int k = 1; k <= m; ++k)
        if (partner[k - 1] == 0) {
            first = k;
            break;
        }
    if (first == 0) {
        out.push_back(Pairing(partner));
        return;
    }
    for (int other = first + 1; other <= m; ++other) {
        if (partner[other - 1] != 0)
            continue;
        partner[first - 1] = other;
        partner[other - 1] = first;
        extend_pairings(out, partner, m);
        partner[first - 1] = 0;
        partner[other - 1] = 0;
    }
}

} // namespace

std::vector<Pairing> all_pairings(int n) {
    std::vector<Pairing> out;
    std::vector<int> partner(2 * n, 0);
    extend_pairings(out, partner, 2 * n);
    return out;
}

Pairing template_pairing(const Partition &mu) {
    const int n = mu.size();
    std::vector<int> partner(2 * n, 0);
    auto link = [&](int a, int b) {
        partner[a - 1] = b;
        partner[b - 1] = a;
    };
    int block = 1; // blue blocks are {2b-1, 2b}
    for (int part : mu.parts()) {
        if (part == 1) {
            link(2 * block - 1, 2 * block);
        } else {
            // chain part consecutive blocks into one alternating cycle
            for (int j = 0; j < part - 1; ++j)
                link(2 * (block + j), 2 * (block + j) + 1);
            link(2 * block - 1, 2 * (block + part - 1));
        }
        block += part;
    }
    return Pairing(std::move(partner));
}

Pairing uniform_coset_sample(const Partition &mu, Rng &rng) {
    const int n = mu.size();
    if (n == 0)
        throw DomainError("uniform_coset_sample: empty partition");
    Pairing base = template_pairing(mu);
    // random block permutation
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(w[i], w[j]);
    }
    // random per-block flips
    std::vector<int> flip(n);
    for (int i = 0; i < n; ++i)
        flip[i] = static_cast<int>(rng.below(2));
    auto relabel = [&](int k) {
        int blockidx = (k - 1) / 2;          // 0-based source block
        int pos = (k - 1) % 2;               // position within block
        pos ^= flip[blockidx];
        return 2 * w[blockidx] - 1 + pos;
    };
    std::vector<int> partner(2 * n);
    for (int k = 1; k <= 2 * n; ++k)
        partner[relabel(k) - 1] = relabel(base.partner(k));
    return Pairing(std::move(partner));
}

} // namespace wg

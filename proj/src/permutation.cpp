#include "wg/permutation.hpp"

#include "wg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace wg {

struct Permutation::CycleData {
    std::vector<std::vector<int>> cycles;
};

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
    const int n = degree();
    std::vector<char> seen(n + 1, 0);
    for (size_t i = 0; i < images_.size(); ++i) {
        int v = images_[i];
        if (v < 1 || v > n)
            throw DomainError("permutation: image " + std::to_string(v) + " at position " +
                              std::to_string(i + 1) + " is outside [1," + std::to_string(n) + "]");
        if (seen[v])
            throw DomainError("permutation: value " + std::to_string(v) +
                              " repeated at position " + std::to_string(i + 1));
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i)
        img[i] = i + 1;
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw DomainError("transposition: bad pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ") in S_" + std::to_string(n));
    Permutation p = identity(n);
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
    Permutation p = identity(n);
    std::vector<char> used(n + 1, 0);
    for (const auto &cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k];
            int b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > n)
                throw DomainError("from_cycles: entry " + std::to_string(a) + " outside [1," +
                                  std::to_string(n) + "]");
            if (used[a])
                throw DomainError("from_cycles: entry " + std::to_string(a) + " repeated");
            used[a] = 1;
            p.images_[a - 1] = b;
        }
    }
    return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (!fixes(i))
            return false;
    return true;
}

const Permutation::CycleData &Permutation::cycle_data() const {
    auto existing = std::atomic_load_explicit(&cache_, std::memory_order_acquire);
    if (existing)
        return *existing;
    auto data = std::make_shared<CycleData>();
    const int n = degree();
    std::vector<char> seen(n + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[start])
            continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            seen[cur] = 1;
            cyc.push_back(cur);
            cur = apply(cur);
        } while (cur != start);
        data->cycles.push_back(std::move(cyc));
    }
    std::atomic_store_explicit(&cache_, std::shared_ptr<const CycleData>(data),
                               std::memory_order_release);
    return *data;
}

const std::vector<std::vector<int>> &Permutation::cycles() const { return cycle_data().cycles; }

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto &c : cycles())
        lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

int Permutation::norm() const { return degree() - static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_through(int i) const {
    std::vector<int> cyc;
    int cur = apply(i);
    while (cur != i) {
        cyc.push_back(cur);
        cur = apply(cur);
    }
    cyc.push_back(i);
    return cyc;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 1; i <= degree(); ++i)
        inv[apply(i) - 1] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation Permutation::restrict_top() const {
    const int n = degree();
    if (n == 0 || !fixes(n))
        throw DomainError("restrict_top: permutation does not fix its top element");
    Permutation p;
    p.images_.assign(images_.begin(), images_.end() - 1);
    return p;
}

Permutation compose(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree())
        throw DomainError("compose: degree mismatch (" + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()) + ")");
    std::vector<int> img(a.degree());
    for (int i = 1; i <= a.degree(); ++i)
        img[i - 1] = a.apply(b.apply(i));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation &sigma, const Permutation &eta) {
    return compose(eta.inverse(), compose(sigma, eta));
}

namespace {

Permutation parse_cycle_notation(const std::string &text, int degree_hint) {
    std::vector<std::vector<int>> cycles;
    int max_seen = 0;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("permutation: expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (start == i)
                throw ParseError("permutation: expected digit at position " + std::to_string(i));
            int v = std::stoi(text.substr(start, i - start));
            cyc.push_back(v);
            max_seen = std::max(max_seen, v);
        }
        if (!cyc.empty())
            cycles.push_back(std::move(cyc));
        skip_ws();
    }
    int n = std::max(max_seen, degree_hint);
    try {
        return Permutation::from_cycles(n, cycles);
    } catch (const DomainError &e) {
        throw ParseError(std::string("permutation: ") + e.what());
    }
}

} // namespace

Permutation parse_permutation(const std::string &text, int degree_hint) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        throw ParseError("permutation: empty input");
    if (text[first] == '(')
        return parse_cycle_notation(text, degree_hint);
    std::vector<int> img;
    std::istringstream in(text);
    int v;
    while (in >> v)
        img.push_back(v);
    if (!in.eof())
        throw ParseError("permutation: trailing garbage in one-line form");
    try {
        return Permutation(std::move(img));
    } catch (const DomainError &e) {
        throw ParseError(std::string("permutation: ") + e.what());
    }
}

std::string to_one_line_string(const Permutation &sigma) {
    std::ostringstream out;
    for (int i = 1; i <= sigma.degree(); ++i) {
        if (i > 1)
            out << ' ';
        out << sigma.apply(i);
    }
    return out.str();
}

std::string to_cycle_string(const Permutation &sigma) {
    std::ostringstream out;
    bool any = false;
    for (const auto &cyc : sigma.cycles()) {
        if (cyc.size() < 2)
            continue;
        any = true;
        out << '(';
        for (size_t k = 0; k < cyc.size(); ++k) {
            if (k)
                out << ' ';
            out << cyc[k];
        }
        out << ')';
    }
    if (!any)
        return "()";
    return out.str();
}

Permutation class_representative(const Partition &lambda) {
    const int n = lambda.size();
    if (n == 0)
        return Permutation();
    // Largest cycle takes {1, ..., lambda_1 - 1} plus the top element n; the
    // remaining cycles take consecutive blocks.
    std::vector<std::vector<int>> cycles;
    std::vector<int> first;
    for (int v = 1; v < lambda.parts()[0]; ++v)
        first.push_back(v);
    first.push_back(n);
    cycles.push_back(std::move(first));
    int next = lambda.parts()[0];
    for (size_t c = 1; c < lambda.parts().size(); ++c) {
        std::vector<int> cyc;
        for (int k = 0; k < lambda.parts()[c]; ++k)
            cyc.push_back(next++);
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(n, cycles);
}

Permutation uniform_class_sample(const Partition &lambda, Rng &rng) {
    const int n = lambda.size();
    if (n == 0)
        throw DomainError("uniform_class_sample: empty partition");
    std::vector<int> arrangement(n);
    for (int i = 0; i < n; ++i)
        arrangement[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(arrangement[i], arrangement[j]);
    }
    std::vector<int> img(n);
    int pos = 0;
    for (int part : lambda.parts()) {
        for (int k = 0; k < part; ++k) {
            int a = arrangement[pos + k];
            int b = arrangement[pos + (k + 1) % part];
            img[a - 1] = b;
        }
        pos += part;
    }
    return Permutation(std::move(img));
}

} // namespace wg

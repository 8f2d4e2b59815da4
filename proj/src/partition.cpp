#include "wg/partition.hpp"

#include "wg/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace wg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition: part " + std::to_string(i + 1) + " is " +
                              std::to_string(parts_[i]) + ", must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition: parts must be weakly decreasing at index " +
                              std::to_string(i + 1));
        size_ += parts_[i];
    }
}

bool Partition::all_ones() const {
    for (int p : parts_)
        if (p != 1)
            return false;
    return true;
}

Partition parse_partition(const std::string &text) {
    std::vector<int> parts;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size() || (text[i] == '-' && i + 1 == text.size()))
        return Partition();
    while (i < text.size()) {
        skip_ws();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw ParseError("partition: expected digit at position " + std::to_string(i));
        parts.push_back(std::stoi(text.substr(start, i - start)));
        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != ',')
            throw ParseError(std::string("partition: expected ',' at position ") +
                             std::to_string(i) + ", got '" + text[i] + "'");
        ++i;
    }
    try {
        return Partition(parts);
    } catch (const DomainError &e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
}

std::string to_string(const Partition &p) {
    if (p.empty())
        return "-";
    std::ostringstream out;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out << ',';
        out << p.parts()[i];
    }
    return out.str();
}

namespace {

void extend(std::vector<Partition> &out, std::vector<int> &stack, int remaining, int cap) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stack.push_back(next);
        extend(out, stack, remaining - next, next);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw DomainError("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    extend(out, stack, n, n);
    return out;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Int conjugacy_class_size(const Partition &lambda) {
    Int denom = 1;
    std::map<int, int> mult;
    for (int p : lambda.parts()) {
        denom *= p;
        ++mult[p];
    }
    for (auto &[part, m] : mult)
        denom *= factorial(m);
    return factorial(lambda.size()) / denom;
}

} // namespace wg

#include "wg/catalan.hpp"

#include "wg/errors.hpp"

#include <mutex>
#include <vector>

namespace wg {

namespace {

std::mutex catalan_mutex;
std::vector<Int> catalan_table = {Int(1)}; // Cat(0)
int catalan_cap = 10000;

} // namespace

void set_catalan_cap(int cap) {
    std::lock_guard<std::mutex> lock(catalan_mutex);
    catalan_cap = cap;
}

const Int &catalan(int k) {
    if (k < 0)
        throw DomainError("catalan: negative index");
    std::lock_guard<std::mutex> lock(catalan_mutex);
    if (k >= catalan_cap)
        throw CapError("catalan: index " + std::to_string(k) + " exceeds cap " +
                       std::to_string(catalan_cap));
    while (static_cast<int>(catalan_table.size()) <= k) {
        // Cat(m+1) = Cat(m) * 2(2m+1)/(m+2)
        int m = static_cast<int>(catalan_table.size()) - 1;
        Int next = catalan_table.back() * 2 * (2 * m + 1) / (m + 2);
        catalan_table.push_back(next);
    }
    return catalan_table[k];
}

Int moebius(const Partition &lambda) {
    Int prod = 1;
    for (int part : lambda.parts())
        prod *= catalan(part - 1);
    if (lambda.norm() % 2 != 0)
        prod = -prod;
    return prod;
}

Int moebius(const Permutation &sigma) { return moebius(sigma.cycle_type()); }

Int moebius_abs(const Partition &lambda) {
    Int prod = 1;
    for (int part : lambda.parts())
        prod *= catalan(part - 1);
    return prod;
}

Rat catalan_quotient_max(int k) {
    if (k < 2)
        throw DomainError("catalan_quotient_max: requires k >= 2");
    Rat best = 0;
    const Int &top = catalan(k - 1);
    for (int j = 1; j <= k - 1; ++j) {
        Rat q(top, catalan(j - 1) * catalan(k - j - 1));
        q.canonicalize();
        if (q > best)
            best = q;
    }
    return best;
}

} // namespace wg

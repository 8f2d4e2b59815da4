#pragma once

#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"

namespace wg {

// k-th Catalan number (2k)!/(k!(k+1)!), exact. Values are memoized in a
// process-wide table guarded by a mutex; the table is capped (default 10^4
// entries) and the cap can be raised with set_catalan_cap.
const Int &catalan(int k);
void set_catalan_cap(int cap);

// (-1)^{size - length} * prod_i Cat(lambda_i - 1)
Int moebius(const Partition &lambda);
Int moebius(const Permutation &sigma);
Int moebius_abs(const Partition &lambda);

// max over 1 <= j <= k-1 of Cat(k-1) / (Cat(j-1) Cat(k-j-1)); k >= 2.
Rat catalan_quotient_max(int k);

} // namespace wg

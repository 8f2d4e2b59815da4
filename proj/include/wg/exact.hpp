#pragma once

#include "wg/graph.hpp"
#include "wg/pairing.hpp"
#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wg {

enum class MatrixGroup { Unitary, Orthogonal, Symplectic };

std::string group_name(MatrixGroup g);
MatrixGroup parse_group(const std::string &name);

// Exact Weingarten values stored per conjugacy class (unitary) or coset type
// (orthogonal / symplectic), levels 0..n. Level 0 holds the empty partition
// with value 1. For the symplectic group the stored values are magnitudes;
// the sign is left unresolved and is emitted as "±".
struct WgTable {
    MatrixGroup group = MatrixGroup::Unitary;
    Rat N;
    int n = 0;
    std::vector<std::map<Partition, Rat>> levels;

    const Rat &value(const Partition &klass) const;
    const Rat &identity_value(int k) const; // class (1,...,1) at level k
};

// Independent oracle: solves the Haar-moment convolution system
//   sum_tau N^{#cycles(sigma^{-1} tau)} Wg(tau) = [sigma = id]
// aggregated over conjugacy classes (rows for conjugate sigma are identical,
// which tests cross-check against the literal k! x k! system). Hard cap n <= 7.
WgTable wg_unitary_gram(int n, const Rat &N);

// Per-level loop-equation solve: for each k <= n and lambda |- k, with
// sigma_lambda a representative whose largest cycle contains k,
//   w_lambda + N^{-1} sum_{i<k} w_{shape((i k) sigma_lambda)}
//     = N^{-1} w_{id_{k-1}} [lambda = (1,...,1)].
// Dimension p(k) per level; singular levels are reported, never regularized.
WgTable wg_unitary_recursion(int n, const Rat &N);

// Closed form for the class of the n-cycle:
//   (-1)^{n-1} Cat(n-1) / ((N-n+1)...(N-1) N (N+1)...(N+n-1)).
Rat wg_full_cycle(int n, const Rat &N);

// Orthogonal oracle over pairings: solves
//   sum_rho N^{loops(pi, rho)} Wg(coset(rho)) = [pi = e]
// with loops(pi, rho) the component count of the union of the two matchings,
// aggregated over coset types. Hard cap 2n <= 8.
WgTable wg_orthogonal_gram(int n, const Rat &N);

// |Wg^SP_N| = |Wg^O_{2N}| per coset class; signs unresolved (emitted as "±").
WgTable wg_symplectic_magnitudes(int n, const Int &N);

// Truncated path series with a rigorous tail from the trivial cap
// |P| <= (2n)^{n+|sigma|+2g}. `partial` approximates the normalized value
// (-1)^{|sigma|} N^{n+|sigma|} Wg(sigma); the guarantee is
//   |normalized - partial| <= tail.
struct SeriesApproximation {
    Rat partial;
    Rat tail;
};
SeriesApproximation wg_unitary_series(const Permutation &sigma, const Rat &N, int g_max,
                                      GraphCaps caps = {});
// Orthogonal analogue: partial sums of
//   sum_{g1,g2} |P(pi,g1,g2)| (-1)^{g1} N^{-g1-2g2}
// through total defect weight g1 + 2g2 <= g_max, approximating
// (-1)^{|pi|} N^{n+|pi|} Wg^O(pi).
SeriesApproximation wg_orthogonal_series(const Pairing &pi, const Rat &N, int g_max,
                                         GraphCaps caps = {});

// Vector indexed by all partitions of r <= n, plus the empty partition.
// Missing entries read as 0.
struct ClassVector {
    int n = 0;
    std::map<Partition, Rat> entries;

    Rat at(const Partition &p) const;
    void set(const Partition &p, Rat v) { entries[p] = std::move(v); }
};

ClassVector table_to_class_vector(const WgTable &table);

// || x ||_gamma = |x_empty| +
//   sup_{r in [n]} sup_{lambda |- r}
//     N^{r+|sigma_lambda|} gamma^{|sigma_lambda|} |Moeb(sigma_lambda)|^{-1} |x_lambda|.
Rat gamma_norm(const ClassVector &x, const Rat &gamma, const Rat &N);

// One application of the partition-level loop operator:
//   (Tx)_empty = x_empty,
//   (Tx)_lambda = N^{-1} w_{id_{k-1}} [lambda = (1,..,1)]
//                 - N^{-1} sum_{i<k} x_{shape((i k) sigma_lambda)},
// where the identity-class values w come from `table` (which also fixes N).
ClassVector apply_loop_operator(const ClassVector &x, const WgTable &table);

// JSON array of {group, N, level, partition, value} rows (plus sign for SP);
// bit-exact round trip.
std::string table_to_json(const WgTable &table);
WgTable table_from_json(const std::string &text);

} // namespace wg

#pragma once

#include "wg/pairing.hpp"
#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wg {

// Unitary Weingarten graph. Level k holds S_k; from sigma in S_k there are
// k-1 solid edges sigma -> (i k) * sigma (left multiplication, one per
// i < k), and a dashed edge to the restriction sigma|_[k-1] exactly when
// sigma fixes k. Paths are counted from sigma down to the empty permutation.
struct UnitarySuccessor {
    bool dashed;
    int transposed; // i of the applied (i k); 0 for the dashed edge
    Permutation to;
};
std::vector<UnitarySuccessor> unitary_successors(const Permutation &sigma);

// Orthogonal Weingarten graph on pairings. From pi with 2k points there are
// 2k-2 solid edges pi -> (i 2k-1).pi, and a dashed edge dropping the pair
// {2k-1, 2k} when present. A solid edge is classified by the coset-length
// delta it produces: Split raises the component count (norm drops), Minor
// keeps it, Major lowers it (norm grows).
enum class OrthEdgeKind { Dashed, Split, Minor, Major };
struct OrthogonalSuccessor {
    OrthEdgeKind kind;
    int transposed; // i of the applied (i 2k-1); 0 for the dashed edge
    Pairing to;
};
std::vector<OrthogonalSuccessor> orthogonal_successors(const Pairing &pi);

struct GraphCaps {
    int max_unitary_degree = 8;
    int max_orthogonal_half = 5; // 2n <= 10
    int max_solid_budget = 64;
};

// Memoized exact path counting. Counting is single-threaded: the memo table
// is not synchronized, so use one counter per thread (states are plain values
// and may be shared).
class UnitaryPathCounter {
  public:
    explicit UnitaryPathCounter(GraphCaps caps = {}) : caps_(caps) {}

    // |P(sigma, |sigma| + 2g)|: directed sigma -> empty paths taking exactly
    // |sigma| + 2g solid edges.
    Int count(const Permutation &sigma, int g);
    // Paths taking exactly `solid` solid edges (0 when the parity is wrong).
    Int count_solid(const Permutation &sigma, int solid);

  private:
    GraphCaps caps_;
    std::map<std::pair<std::vector<int>, int>, Int> memo_;
};

class OrthogonalPathCounter {
  public:
    explicit OrthogonalPathCounter(GraphCaps caps = {}) : caps_(caps) {}

    // |P(pi, g1, g2)|: paths with exactly g1 minor and g2 major defects (and
    // consequently |pi| + g2 splitting solid edges).
    Int count(const Pairing &pi, int g1, int g2);

  private:
    struct Key {
        std::vector<int> partner;
        int g1;
        int g2;
        bool operator<(const Key &o) const {
            if (g1 != o.g1)
                return g1 < o.g1;
            if (g2 != o.g2)
                return g2 < o.g2;
            return partner < o.partner;
        }
    };
    GraphCaps caps_;
    std::map<Key, Int> memo_;
};

Int count_paths_unitary(const Permutation &sigma, int g, GraphCaps caps = {});
Int count_paths_unitary(const Partition &lambda, int g, GraphCaps caps = {});
Int count_paths_orthogonal(const Pairing &pi, int g1, int g2, GraphCaps caps = {});
Int count_paths_orthogonal(const Partition &coset, int g1, int g2, GraphCaps caps = {});

// Exact |P(sigma, |sigma|+2)| / |P(sigma, |sigma|)| for sigma of shape lambda
// (a class function; the class-constancy is exercised in tests).
Rat single_defect_ratio(const Partition &lambda, GraphCaps caps = {});

// Exhaustive listing of the minimal (defect-free) paths; states include every
// intermediate permutation/pairing and the final empty state.
std::vector<std::vector<Permutation>> enumerate_minimal_paths(const Permutation &sigma);
std::vector<std::vector<Pairing>> enumerate_minimal_paths(const Pairing &pi);

// CSV dumps for golden-file tests: one row per class at level n.
// Unitary columns: class,g,count. Orthogonal columns: coset,g1,g2,count.
std::string unitary_counts_csv(int n, int g_max, GraphCaps caps = {});
std::string orthogonal_counts_csv(int n, int g1_max, int g2_max, GraphCaps caps = {});

} // namespace wg

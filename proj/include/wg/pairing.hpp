#pragma once

#include "wg/partition.hpp"
#include "wg/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wg {

// Perfect matching of [2n], stored as an involution array partner_[k-1] =
// partner of k (1-based). Immutable value type.
//
// The coset-type graph G_pi has vertex set [2n], blue edges {2i-1, 2i} and red
// edges {k, pi(k)}; every component is an alternating cycle of even size, and
// the half-sizes sorted decreasingly form the coset type.
class Pairing {
  public:
    Pairing() = default; // n = 0
    explicit Pairing(std::vector<int> partner);

    static Pairing canonical(int n); // {1,2},{3,4},...,{2n-1,2n}

    int half_size() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }
    int partner(int k) const { return partner_[k - 1]; }
    const std::vector<int> &partners() const { return partner_; }

    // Relabel both members of every pair through the transposition (a b).
    Pairing act_transposition(int a, int b) const;
    // Sorted pair list, smaller element first, sorted by smaller element.
    std::vector<std::pair<int, int>> pairs() const;

    Partition coset_type() const;
    int norm() const { return half_size() - coset_type().length(); }

    bool has_top_pair() const; // contains {2n-1, 2n}
    Pairing remove_top_pair() const;

    bool operator==(const Pairing &other) const { return partner_ == other.partner_; }
    bool operator<(const Pairing &other) const { return partner_ < other.partner_; }

  private:
    std::vector<int> partner_;
};

// Alternating walk around the G_pi cycle containing 2n-1, red direction first:
// vertices = (2n-1, i_1, ..., i_{2m-1}) with i_{2m-1} = 2n. When pi contains
// the pair {2n-1, 2n} the walk is (2n-1, 2n).
struct CosetWalk {
    std::vector<int> vertices;
    int component_half_size() const { return static_cast<int>(vertices.size()) / 2; }
};
CosetWalk coset_walk(const Pairing &pi);

// The m-1 transpositions (i_{2j} 2n-1) that split the size-2m component of
// 2n-1 into two components; whole-component sizes after the split are 2*part_a
// and 2*part_b with part_a + part_b = m. Which of the two contains 2n-1 is
// deliberately not part of the contract; recompute the coset type if needed.
// Empty when the component of 2n-1 already has size 2 (the pair {2n-1, 2n}).
struct SplitTarget {
    int vertex; // i_{2j}
    int part_a; // j
    int part_b; // m - j
};
std::vector<SplitTarget> split_targets(const Pairing &pi);

// "{1-2, 3-7, 4-6, 5-8}", whitespace tolerant.
Pairing parse_pairing(const std::string &text);
std::string to_string(const Pairing &pi);

// All pairings of [2n] (double factorial many; keep n small).
std::vector<Pairing> all_pairings(int n);

// Deterministic pairing with the requested coset type.
Pairing template_pairing(const Partition &mu);

// Uniform sample from the pairings with coset type mu: the template hit with a
// uniformly random blue-block symmetry (block permutation plus per-block
// flips), which acts transitively on each coset class with fibers of equal
// size.
Pairing uniform_coset_sample(const Partition &mu, Rng &rng);

} // namespace wg

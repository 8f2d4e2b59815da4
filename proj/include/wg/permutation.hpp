#pragma once

#include "wg/partition.hpp"
#include "wg/rng.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wg {

// Permutation of [n] in one-line storage (images[i-1] = sigma(i), 1-based
// values). Values are immutable after construction; the cycle decomposition is
// computed on demand and cached behind an atomically published shared pointer,
// so instances can be shared freely across threads.
//
// Composition convention used throughout the library:
//   (a * b)(i) = a(b(i)).
class Permutation {
  public:
    Permutation() = default; // degree 0 (the empty permutation)
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // Transposition (i j) in S_n.
    static Permutation transposition(int n, int i, int j);
    // Builds the permutation with the given disjoint cycles; entries not
    // mentioned are fixed points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[i - 1]; } // 1-based
    const std::vector<int> &one_line() const { return images_; }
    bool fixes(int i) const { return images_[i - 1] == i; }
    bool is_identity() const;

    // Disjoint cycles, each rotated to start at its smallest element, sorted
    // by that element. Cached.
    const std::vector<std::vector<int>> &cycles() const;
    Partition cycle_type() const;
    // n - (number of cycles): minimal transposition factorization length.
    int norm() const;
    // The cycle containing i, rotated so that i is last.
    std::vector<int> cycle_through(int i) const;

    Permutation inverse() const;
    // Restriction to [n-1]; requires sigma(n) = n.
    Permutation restrict_top() const;

    bool operator==(const Permutation &other) const { return images_ == other.images_; }
    bool operator<(const Permutation &other) const { return images_ < other.images_; }

  private:
    struct CycleData;
    const CycleData &cycle_data() const;

    std::vector<int> images_;
    mutable std::shared_ptr<const CycleData> cache_;
};

// (a * b)(i) = a(b(i)); degrees must match.
Permutation compose(const Permutation &a, const Permutation &b);
// eta^{-1} * sigma * eta
Permutation conjugate(const Permutation &sigma, const Permutation &eta);

// Accepts one-line form "3 1 2" or cycle notation "(1 2 3)(4 5)"; for cycle
// notation the degree is max(mentioned, degree_hint). Rejects non-bijections
// with a positioned message.
Permutation parse_permutation(const std::string &text, int degree_hint = 0);
std::string to_one_line_string(const Permutation &sigma);
std::string to_cycle_string(const Permutation &sigma);

// Representative of the conjugacy class S_lambda in which the top element
// (lambda.size()) sits in the largest cycle.
Permutation class_representative(const Partition &lambda);

// Uniform sample from S_lambda: writes lambda's cycle template and fills it
// with a Fisher-Yates-shuffled arrangement of [n].
Permutation uniform_class_sample(const Partition &lambda, Rng &rng);

} // namespace wg

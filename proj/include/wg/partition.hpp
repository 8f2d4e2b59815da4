#pragma once

#include "wg/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace wg {

// Integer partition: weakly decreasing positive parts. The empty partition
// (of 0) is allowed and prints as "-".
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates ordering and positivity

    const std::vector<int> &parts() const { return parts_; }
    int size() const { return size_; }                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    // n - length; the norm of any permutation/pairing of this shape.
    int norm() const { return size_ - length(); }

    bool all_ones() const;

    auto operator<=>(const Partition &other) const = default;

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// "3,1,1" (the empty partition parses from "-" or ""). Rejects non-monotone
// sequences with a positioned message.
Partition parse_partition(const std::string &text);
std::string to_string(const Partition &p);

// All partitions of n, largest-part-first order (reverse lexicographic).
// partitions_of(0) = { Partition() }.
std::vector<Partition> partitions_of(int n);

// |S_lambda| = n! / (prod parts * prod multiplicity!)
Int conjugacy_class_size(const Partition &lambda);

Int factorial(int n);

} // namespace wg

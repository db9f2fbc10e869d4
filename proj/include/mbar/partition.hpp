#ifndef MBAR_PARTITION_HPP
#define MBAR_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "mbar/rational.hpp"

namespace mbar {

// Partition of a non-negative integer, parts stored descending. The empty
// partition indexes constant terms.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition ones(int n);    // (1^n)
    static Partition single(int m);  // (m)

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int multiplicity(int part) const;

    // (part size, multiplicity) pairs, sizes descending
    std::vector<std::pair<int, int>> mults() const;

    // z_rho = prod i^{rho(i)} rho(i)!
    BigRat z() const;

    Partition merged(const Partition& o) const;      // disjoint-union product index
    Partition scaled(int k) const;                   // every part times k
    bool remove_one_part(int m, Partition* out) const;

    // ordered by weight, then by parts; gives weight-major map iteration
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const = default;

    std::string str() const;  // "[3,1,1]"

private:
    void normalize();
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n, ascending in the ordering above.
const std::vector<Partition>& partitions_of(int n);

// Elementary number theory on small arguments.
int mobius(int n);
int totient(int n);
std::vector<int> divisors(int n);

}  // namespace mbar

#endif

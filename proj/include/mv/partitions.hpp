#pragma once

// Odd partitions and compositions of singularity and valency data.

#include "mv/arith.hpp"

#include <string>
#include <vector>

namespace mv {

// Ordered list of parts.
struct Composition {
    std::vector<int> parts;

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
};

enum class PartitionRole { Singularities, Valencies };

// Multiset of odd parts, stored sorted in descending order.
class OddPartition {
public:
    OddPartition() = default;
    OddPartition(std::vector<int> parts, PartitionRole role = PartitionRole::Valencies);

    const std::vector<int>& parts() const { return parts_; }
    PartitionRole role() const { return role_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int mu(int i) const;
    Composition to_composition() const { return Composition{parts_}; }

    // kappa = k + 2 and back.
    OddPartition shifted(int delta) const;

    bool operator==(const OddPartition& o) const { return parts_ == o.parts_ && role_ == o.role_; }
    bool operator<(const OddPartition& o) const { return parts_ < o.parts_; }

    // "3,-1^3" style, canonical (descending, powers for repeats).
    std::string to_string() const;
    // Bracketed "[5,1^3]".
    std::string bracket() const;

private:
    std::vector<int> parts_;
    PartitionRole role_ = PartitionRole::Valencies;
};

int mu(const std::vector<int>& parts, int i);
Integer aut_order(const std::vector<int>& parts);
Integer c_kappa(const std::vector<int>& parts);
inline Integer aut_order(const OddPartition& p) { return aut_order(p.parts()); }
inline Integer c_kappa(const OddPartition& p) { return c_kappa(p.parts()); }

// Parses "3,-1^3" into a list of integers (order preserved).
std::vector<int> parse_parts(const std::string& text);
std::string format_parts(std::vector<int> parts);

// Parses and validates a stratum: odd parts >= -1.
OddPartition parse_stratum(const std::string& text);

struct GenusDim {
    int g;
    int d;
};
GenusDim stratum_genus_dim(const OddPartition& k);

bool euler_check(int g, int n, const std::vector<int>& kappa);
inline bool euler_check(int g, int n, const OddPartition& kappa) { return euler_check(g, n, kappa.parts()); }

// Sorted descending copy.
std::vector<int> sorted_desc(std::vector<int> parts);

}  // namespace mv

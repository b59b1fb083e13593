// The finite monoid of annular partitions obtained by forgetting offsets.
#pragma once

#include "diagmon/affine.hpp"
#include "diagmon/finite_monoid.hpp"
#include "diagmon/partition.hpp"

#include <unordered_map>
#include <vector>

namespace diagmon {

struct AnnMonoid {
    int n = 0;
    std::vector<Partition> elements;
    std::unordered_map<Partition, FiniteMonoid::Element> index;
    FiniteMonoid monoid;                        // involution: reflection
    std::vector<FiniteMonoid::Element> rotation; // rho on elements
    std::vector<int> ranks;
    std::vector<FiniteMonoid::Element> generators;

    FiniteMonoid::Element find(const Partition& p) const;
    bool contains(const Partition& p) const { return index.contains(p); }
};

inline constexpr int kAnnBound = 6;

// Closure of the images of the rotation, its inverse and the cup/cap pairs.
AnnMonoid build_ann_monoid(int n, int bound = kAnnBound);
// Built once per n and kept for the life of the process; thread-safe.
const AnnMonoid& shared_ann_monoid(int n);

} // namespace diagmon

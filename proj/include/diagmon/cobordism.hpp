// Partitions decorated with per-block genus labels and closed-component spectra.
#pragma once

#include "diagmon/partition.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace diagmon {

using Genus = std::int64_t;

// Finitely supported map genus -> multiplicity of closed components.
class ClosedSpectrum {
public:
    using Entry = std::pair<Genus, std::int64_t>;

    ClosedSpectrum() = default;

    void add(Genus genus, std::int64_t count = 1);
    std::int64_t at(Genus genus) const noexcept;
    std::int64_t total() const noexcept;
    bool nonnegative() const noexcept;
    bool empty() const noexcept { return entries_.empty(); }
    const SmallVec<Entry, 4>& entries() const noexcept { return entries_; }

    ClosedSpectrum negated() const;
    ClosedSpectrum& operator+=(const ClosedSpectrum& other);
    friend ClosedSpectrum operator+(ClosedSpectrum a, const ClosedSpectrum& b) { return a += b; }
    friend bool operator==(const ClosedSpectrum&, const ClosedSpectrum&) = default;

private:
    SmallVec<Entry, 4> entries_; // sorted by genus, no zero counts
};

std::string to_string(const ClosedSpectrum& s);

// (base, s): base partition with a count of closed components.
struct DeformedPartition {
    Partition base;
    std::int64_t s = 0;
    bool regular = false;

    friend bool operator==(const DeformedPartition&, const DeformedPartition&) = default;
};

// (base, g): genus label per block of base.
struct LabeledPartition {
    Partition base;
    SmallVec<Genus> genus;
    bool regular = false;

    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
};

// (base, g, s).
struct Cobordism {
    Partition base;
    SmallVec<Genus> genus;
    ClosedSpectrum closed;
    bool regular = false;

    friend bool operator==(const Cobordism&, const Cobordism&) = default;
};

DeformedPartition make_deformed(Partition base, std::int64_t s, bool regular);
LabeledPartition make_labeled(Partition base, SmallVec<Genus> genus, bool regular);
Cobordism make_cobordism(Partition base, SmallVec<Genus> genus, ClosedSpectrum closed, bool regular);

inline Cobordism plain_cobordism(const Partition& base, bool regular = false)
{
    return make_cobordism(base, SmallVec<Genus>(static_cast<std::size_t>(base.block_count()), 0), {},
                          regular);
}

std::string to_string(const Cobordism& c);

// Genus change when a blocks of the left factor and b of the right factor
// merge through v middle vertices.
inline Genus merge_increment(const MergedClass& c) noexcept
{
    return c.middle - (c.alpha_blocks + c.beta_blocks) + 1;
}

DeformedPartition compose(const DeformedPartition& x, const DeformedPartition& y);
LabeledPartition compose(const LabeledPartition& x, const LabeledPartition& y);
Cobordism compose(const Cobordism& x, const Cobordism& y);

inline DeformedPartition operator*(const DeformedPartition& x, const DeformedPartition& y) { return compose(x, y); }
inline LabeledPartition operator*(const LabeledPartition& x, const LabeledPartition& y) { return compose(x, y); }
inline Cobordism operator*(const Cobordism& x, const Cobordism& y) { return compose(x, y); }

// Regular involutions. Throw NotRegular on non-regular input.
DeformedPartition star(const DeformedPartition& x);
LabeledPartition star(const LabeledPartition& x);
Cobordism star(const Cobordism& x);

// Reflection (sigma) and rotation (rho): labels travel with their blocks.
inline Partition sigma(const Partition& p) { return reflect(p); }
inline Partition rho(const Partition& p) { return rotate(p); }
DeformedPartition sigma(const DeformedPartition& x);
DeformedPartition rho(const DeformedPartition& x);
LabeledPartition sigma(const LabeledPartition& x);
LabeledPartition rho(const LabeledPartition& x);
Cobordism sigma(const Cobordism& x);
Cobordism rho(const Cobordism& x);

DeformedPartition project_to_deformed(const Cobordism& x);
LabeledPartition project_to_labeled(const Cobordism& x);

// Closed-form product x_1 ... x_k of cobordisms over one irreducible idempotent base.
Cobordism fiber_product(const Partition& base, std::span<const Cobordism> factors);

} // namespace diagmon

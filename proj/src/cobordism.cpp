#include "diagmon/cobordism.hpp"

#include "diagmon/error.hpp"

#include <algorithm>

namespace diagmon {

void ClosedSpectrum::add(Genus genus, std::int64_t count)
{
    if (count == 0) {
        return;
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), genus,
                               [](const Entry& e, Genus g) { return e.first < g; });
    if (it != entries_.end() && it->first == genus) {
        it->second += count;
        if (it->second == 0) {
            entries_.erase(it);
        }
    } else {
        entries_.insert(it, Entry{genus, count});
    }
}

std::int64_t ClosedSpectrum::at(Genus genus) const noexcept
{
    for (const auto& [g, c] : entries_) {
        if (g == genus) {
            return c;
        }
    }
    return 0;
}

std::int64_t ClosedSpectrum::total() const noexcept
{
    std::int64_t t = 0;
    for (const auto& e : entries_) {
        t += e.second;
    }
    return t;
}

bool ClosedSpectrum::nonnegative() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second > 0; });
}

ClosedSpectrum ClosedSpectrum::negated() const
{
    ClosedSpectrum out = *this;
    for (auto& e : out.entries_) {
        e.second = -e.second;
    }
    return out;
}

ClosedSpectrum& ClosedSpectrum::operator+=(const ClosedSpectrum& other)
{
    for (const auto& [g, c] : other.entries_) {
        add(g, c);
    }
    return *this;
}

std::string to_string(const ClosedSpectrum& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [g, c] : s.entries()) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += std::to_string(g) + ":" + std::to_string(c);
    }
    return out + "}";
}

DeformedPartition make_deformed(Partition base, std::int64_t s, bool regular)
{
    require(regular || s >= 0, ErrorCode::Range, "closed count must be non-negative");
    return {std::move(base), s, regular};
}

LabeledPartition make_labeled(Partition base, SmallVec<Genus> genus, bool regular)
{
    require(genus.size() == static_cast<std::size_t>(base.block_count()), ErrorCode::Coverage,
            "need one genus label per block");
    if (!regular) {
        for (Genus g : genus) {
            require(g >= 0, ErrorCode::Range, "genus labels must be non-negative");
        }
    }
    return {std::move(base), std::move(genus), regular};
}

Cobordism make_cobordism(Partition base, SmallVec<Genus> genus, ClosedSpectrum closed, bool regular)
{
    auto labeled = make_labeled(std::move(base), std::move(genus), regular);
    if (!regular) {
        require(closed.nonnegative(), ErrorCode::Range, "spectrum counts must be non-negative");
        for (const auto& e : closed.entries()) {
            require(e.first >= 0, ErrorCode::Range, "closed genus must be non-negative");
        }
    }
    return {std::move(labeled.base), std::move(labeled.genus), std::move(closed), regular};
}

std::string to_string(const Cobordism& c)
{
    std::string out = to_string(c.base) + " g=(";
    for (std::size_t i = 0; i < c.genus.size(); ++i) {
        out += (i ? "," : "") + std::to_string(c.genus[i]);
    }
    return out + ") s=" + to_string(c.closed);
}

namespace {

void check_flags(bool a, bool b)
{
    require(a == b, ErrorCode::RegularityMismatch, "cannot mix regular and non-regular operands");
}

// Labels of every merged class: product blocks first, then dead blocks.
SmallVec<Genus> merged_labels(const Composite& c, const SmallVec<Genus>& g, const SmallVec<Genus>& h)
{
    SmallVec<Genus> out(c.classes.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[static_cast<std::size_t>(c.alpha_target[i])] += g[i];
    }
    for (std::size_t j = 0; j < h.size(); ++j) {
        out[static_cast<std::size_t>(c.beta_target[j])] += h[j];
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += merge_increment(c.classes[k]);
    }
    return out;
}

} // namespace

DeformedPartition compose(const DeformedPartition& x, const DeformedPartition& y)
{
    check_flags(x.regular, y.regular);
    const auto c = compose_detailed(x.base, y.base);
    return {c.product, x.s + y.s + c.dead_count(), x.regular};
}

LabeledPartition compose(const LabeledPartition& x, const LabeledPartition& y)
{
    check_flags(x.regular, y.regular);
    const auto c = compose_detailed(x.base, y.base);
    auto labels = merged_labels(c, x.genus, y.genus);
    labels.resize(static_cast<std::size_t>(c.live));
    return {c.product, std::move(labels), x.regular};
}

Cobordism compose(const Cobordism& x, const Cobordism& y)
{
    check_flags(x.regular, y.regular);
    const auto c = compose_detailed(x.base, y.base);
    auto labels = merged_labels(c, x.genus, y.genus);
    ClosedSpectrum closed = x.closed;
    closed += y.closed;
    for (std::size_t k = static_cast<std::size_t>(c.live); k < labels.size(); ++k) {
        closed.add(labels[k]);
    }
    labels.resize(static_cast<std::size_t>(c.live));
    return {c.product, std::move(labels), std::move(closed), x.regular};
}

namespace {

void require_regular(bool regular)
{
    require(regular, ErrorCode::NotRegular, "the involution exists only in the regular category");
}

SmallVec<Genus> transport_labels(const SmallVec<Genus>& genus, const std::vector<int>& block_map)
{
    SmallVec<Genus> out(genus.size());
    for (std::size_t b = 0; b < genus.size(); ++b) {
        out[static_cast<std::size_t>(block_map[b])] = genus[b];
    }
    return out;
}

SmallVec<Genus> starred_labels(const Partition& base, const SmallVec<Genus>& genus,
                               const std::vector<int>& block_map)
{
    const auto stats = block_stats(base);
    SmallVec<Genus> out(genus.size());
    for (std::size_t b = 0; b < genus.size(); ++b) {
        out[static_cast<std::size_t>(block_map[b])] = -genus[b] - stats.blocks[b].size() + 2;
    }
    return out;
}

} // namespace

DeformedPartition star(const DeformedPartition& x)
{
    require_regular(x.regular);
    const Partition r = reflect(x.base);
    const std::int64_t correction = dead_blocks(x.base, r) + dead_blocks(r, x.base);
    return {r, -x.s - correction, true};
}

LabeledPartition star(const LabeledPartition& x)
{
    require_regular(x.regular);
    auto t = reflect_transport(x.base);
    return {t.partition, starred_labels(x.base, x.genus, t.block_map), true};
}

Cobordism star(const Cobordism& x)
{
    require_regular(x.regular);
    auto t = reflect_transport(x.base);
    const auto stats = block_stats(x.base);
    ClosedSpectrum closed = x.closed.negated();
    closed.add(1, -(stats.left_blocks + stats.right_blocks));
    return {t.partition, starred_labels(x.base, x.genus, t.block_map), std::move(closed), true};
}

DeformedPartition sigma(const DeformedPartition& x) { return {reflect(x.base), x.s, x.regular}; }
DeformedPartition rho(const DeformedPartition& x) { return {rotate(x.base), x.s, x.regular}; }

LabeledPartition sigma(const LabeledPartition& x)
{
    auto t = reflect_transport(x.base);
    return {t.partition, transport_labels(x.genus, t.block_map), x.regular};
}

LabeledPartition rho(const LabeledPartition& x)
{
    auto t = rotate_transport(x.base);
    return {t.partition, transport_labels(x.genus, t.block_map), x.regular};
}

Cobordism sigma(const Cobordism& x)
{
    auto t = reflect_transport(x.base);
    return {t.partition, transport_labels(x.genus, t.block_map), x.closed, x.regular};
}

Cobordism rho(const Cobordism& x)
{
    auto t = rotate_transport(x.base);
    return {t.partition, transport_labels(x.genus, t.block_map), x.closed, x.regular};
}

DeformedPartition project_to_deformed(const Cobordism& x)
{
    return {x.base, x.closed.total(), x.regular};
}

LabeledPartition project_to_labeled(const Cobordism& x)
{
    return {x.base, x.genus, x.regular};
}

Cobordism fiber_product(const Partition& base, std::span<const Cobordism> factors)
{
    require(!factors.empty(), ErrorCode::Range, "need at least one factor");
    require(base.m() == base.n() && base.n() >= 1, ErrorCode::NotIrreducible,
            "base must be a non-empty square partition");
    require(is_irreducible(base), ErrorCode::NotIrreducible, "base is not irreducible");
    require(compose(base, base) == base, ErrorCode::NotIdempotent, "base is not idempotent");
    for (const auto& x : factors) {
        require(x.base == base, ErrorCode::BaseMismatch, "factor lies over a different base");
        check_flags(x.regular, factors.front().regular);
    }

    const auto stats = block_stats(base);
    const int n = base.n();
    const auto k = static_cast<std::int64_t>(factors.size());
    int p = 0;
    int q = 0;
    Genus left_sum_tail = 0;  // left blocks of factors 2..k
    Genus right_sum_head = 0; // right blocks of factors 1..k-1
    for (std::size_t b = 0; b < stats.blocks.size(); ++b) {
        switch (stats.blocks[b].kind()) {
        case BlockKind::Left:
            ++p;
            for (std::size_t l = 1; l < factors.size(); ++l) {
                left_sum_tail += factors[l].genus[b];
            }
            break;
        case BlockKind::Right:
            ++q;
            for (std::size_t l = 0; l + 1 < factors.size(); ++l) {
                right_sum_head += factors[l].genus[b];
            }
            break;
        case BlockKind::Transversal:
            break;
        }
    }

    Cobordism out;
    out.base = base;
    out.regular = factors.front().regular;
    out.genus.resize(stats.blocks.size());
    for (const auto& x : factors) {
        out.closed += x.closed;
    }
    for (std::size_t b = 0; b < stats.blocks.size(); ++b) {
        switch (stats.blocks[b].kind()) {
        case BlockKind::Left: out.genus[b] = factors.front().genus[b]; break;
        case BlockKind::Right: out.genus[b] = factors.back().genus[b]; break;
        case BlockKind::Transversal: {
            Genus t = 0;
            for (const auto& x : factors) {
                t += x.genus[b];
            }
            out.genus[b] = t + right_sum_head + left_sum_tail + (k - 1) * (n - p - q - 1);
            break;
        }
        }
    }
    if (stats.rank == 0) {
        // Each adjacent pair closes off one component.
        for (std::size_t l = 0; l + 1 < factors.size(); ++l) {
            Genus g = n - (p + q) + 1;
            for (std::size_t b = 0; b < stats.blocks.size(); ++b) {
                if (stats.blocks[b].kind() == BlockKind::Right) {
                    g += factors[l].genus[b];
                } else if (stats.blocks[b].kind() == BlockKind::Left) {
                    g += factors[l + 1].genus[b];
                }
            }
            out.closed.add(g);
        }
    }
    return out;
}

} // namespace diagmon

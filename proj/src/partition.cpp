#include "diagmon/partition.hpp"

#include "diagmon/error.hpp"

#include <algorithm>
#include <numeric>

namespace diagmon {

namespace {

// Minimal union-find on a small index range.
class DisjointSets {
public:
    explicit DisjointSets(int size)
        : parent_(static_cast<std::size_t>(size))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x != y) {
            parent_[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
        }
    }

private:
    SmallVec<int, 24> parent_;
};

// Relabels in place by first appearance; returns the number of blocks.
template <class Range>
int canonicalize(Range& labels)
{
    SmallVec<int, 24> seen;
    int next = 0;
    for (auto& x : labels) {
        auto it = std::find(seen.begin(), seen.end(), x);
        if (it == seen.end()) {
            seen.push_back(x);
            x = next++;
        } else {
            x = static_cast<int>(it - seen.begin());
        }
    }
    return next;
}

} // namespace

std::string to_string(Vertex v)
{
    return (v.side == Side::In ? "In" : "Out") + std::to_string(v.index);
}

Partition Partition::from_blocks(int m, int n, const std::vector<std::vector<Vertex>>& blocks)
{
    require(m >= 0 && n >= 0, ErrorCode::Range, "negative layer size");
    Partition p;
    p.m_ = m;
    p.n_ = n;
    p.labels_.assign(static_cast<std::size_t>(m + n), -1);
    int b = 0;
    for (const auto& block : blocks) {
        require(!block.empty(), ErrorCode::Coverage, "empty block");
        for (const Vertex& v : block) {
            const int limit = v.side == Side::In ? m : n;
            require(v.index >= 1 && v.index <= limit, ErrorCode::Range,
                    "vertex " + to_string(v) + " out of range");
            auto& slot = p.labels_[static_cast<std::size_t>(p.position(v))];
            require(slot == -1, ErrorCode::Overlap, "vertex " + to_string(v) + " in two blocks");
            slot = b;
        }
        ++b;
    }
    for (std::size_t i = 0; i < p.labels_.size(); ++i) {
        require(p.labels_[i] != -1, ErrorCode::Coverage,
                "vertex " + to_string(p.vertex_at(static_cast<int>(i))) + " not covered");
    }
    p.blocks_ = canonicalize(p.labels_);
    return p;
}

Partition Partition::from_labels(int m, int n, std::span<const int> labels)
{
    require(m >= 0 && n >= 0, ErrorCode::Range, "negative layer size");
    require(labels.size() == static_cast<std::size_t>(m + n), ErrorCode::Coverage,
            "label count does not match layer sizes");
    Partition p;
    p.m_ = m;
    p.n_ = n;
    p.labels_.assign(labels.begin(), labels.end());
    p.blocks_ = canonicalize(p.labels_);
    return p;
}

Partition Partition::identity(int n)
{
    std::vector<int> labels(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = i;
        labels[static_cast<std::size_t>(n + i)] = i;
    }
    return from_labels(n, n, labels);
}

Partition Partition::discrete(int m, int n)
{
    std::vector<int> labels(static_cast<std::size_t>(m + n));
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(m, n, labels);
}

int Partition::position(Vertex v) const
{
    if (v.side == Side::In) {
        require(v.index >= 1 && v.index <= m_, ErrorCode::Range, to_string(v) + " out of range");
        return v.index - 1;
    }
    require(v.index >= 1 && v.index <= n_, ErrorCode::Range, to_string(v) + " out of range");
    return m_ + v.index - 1;
}

Vertex Partition::vertex_at(int position) const
{
    if (position < m_) {
        return {Side::In, position + 1};
    }
    return {Side::Out, position - m_ + 1};
}

std::vector<Vertex> Partition::block(int b) const
{
    std::vector<Vertex> out;
    for (int i = 0; i < size(); ++i) {
        if (label(i) == b) {
            out.push_back(vertex_at(i));
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> Partition::blocks() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < size(); ++i) {
        out[static_cast<std::size_t>(label(i))].push_back(vertex_at(i));
    }
    return out;
}

Vertex Partition::least_vertex(int b) const
{
    for (int i = 0; i < size(); ++i) {
        if (label(i) == b) {
            return vertex_at(i);
        }
    }
    fail(ErrorCode::Range, "no block " + std::to_string(b));
}

std::size_t Partition::hash() const noexcept
{
    std::size_t h = static_cast<std::size_t>(m_) * 1000003u ^ static_cast<std::size_t>(n_);
    for (int x : labels_) {
        h = h * 31u + static_cast<std::size_t>(x);
    }
    return h;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (auto c = a.m_ <=> b.m_; c != 0) {
        return c;
    }
    if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.labels_.begin(), a.labels_.end(),
                                                  b.labels_.begin(), b.labels_.end());
}

std::string to_string(const Partition& p)
{
    std::string out = "[" + std::to_string(p.m()) + "->" + std::to_string(p.n()) + "]{";
    bool first_block = true;
    for (const auto& block : p.blocks()) {
        if (!first_block) {
            out += ", ";
        }
        first_block = false;
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += to_string(block[i]);
        }
        out += "}";
    }
    return out + "}";
}

PartitionStats block_stats(const Partition& p)
{
    PartitionStats s;
    s.blocks.resize(static_cast<std::size_t>(p.block_count()));
    for (int i = 0; i < p.size(); ++i) {
        auto& b = s.blocks[static_cast<std::size_t>(p.label(i))];
        if (i < p.m()) {
            ++b.in_vertices;
        } else {
            ++b.out_vertices;
        }
    }
    for (const auto& b : s.blocks) {
        switch (b.kind()) {
        case BlockKind::Transversal: ++s.rank; break;
        case BlockKind::Left: ++s.left_blocks; break;
        case BlockKind::Right: ++s.right_blocks; break;
        }
    }
    return s;
}

int rank(const Partition& p)
{
    return block_stats(p).rank;
}

Composite compose_detailed(const Partition& a, const Partition& b)
{
    require(a.n() == b.m(), ErrorCode::ShapeMismatch,
            "cannot compose [" + std::to_string(a.m()) + "->" + std::to_string(a.n()) + "] with [" +
                std::to_string(b.m()) + "->" + std::to_string(b.n()) + "]");
    const int na = a.block_count();
    const int nb = b.block_count();
    const int l = a.m();
    const int m = a.n();
    const int n = b.n();

    DisjointSets sets(na + nb);
    for (int j = 0; j < m; ++j) {
        sets.unite(a.label(l + j), na + b.label(j));
    }

    SmallVec<int, 24> class_of_root(static_cast<std::size_t>(na + nb), -1);
    int next = 0;
    Composite c;
    c.product.m_ = l;
    c.product.n_ = n;
    c.product.labels_.resize(static_cast<std::size_t>(l + n));
    auto assign = [&](int node) {
        int& slot = class_of_root[static_cast<std::size_t>(sets.find(node))];
        if (slot == -1) {
            slot = next++;
        }
        return slot;
    };
    for (int i = 0; i < l; ++i) {
        c.product.labels_[static_cast<std::size_t>(i)] = assign(a.label(i));
    }
    for (int k = 0; k < n; ++k) {
        c.product.labels_[static_cast<std::size_t>(l + k)] = assign(na + b.label(m + k));
    }
    c.live = next;
    c.product.blocks_ = next;
    for (int j = 0; j < m; ++j) {
        assign(a.label(l + j));
    }

    c.classes.resize(static_cast<std::size_t>(next));
    c.alpha_target.resize(static_cast<std::size_t>(na));
    c.beta_target.resize(static_cast<std::size_t>(nb));
    for (int x = 0; x < na; ++x) {
        const int k = class_of_root[static_cast<std::size_t>(sets.find(x))];
        c.alpha_target[static_cast<std::size_t>(x)] = k;
        ++c.classes[static_cast<std::size_t>(k)].alpha_blocks;
    }
    for (int y = 0; y < nb; ++y) {
        const int k = class_of_root[static_cast<std::size_t>(sets.find(na + y))];
        c.beta_target[static_cast<std::size_t>(y)] = k;
        ++c.classes[static_cast<std::size_t>(k)].beta_blocks;
    }
    for (int j = 0; j < m; ++j) {
        ++c.classes[static_cast<std::size_t>(c.alpha_target[static_cast<std::size_t>(a.label(l + j))])]
              .middle;
    }
    return c;
}

std::vector<int> Composite::dead_block_middle(int dead_index, const Partition& a) const
{
    std::vector<int> out;
    for (int j = 0; j < a.n(); ++j) {
        if (alpha_target[static_cast<std::size_t>(a.label(a.m() + j))] == live + dead_index) {
            out.push_back(j + 1);
        }
    }
    return out;
}

Partition compose(const Partition& a, const Partition& b)
{
    return compose_detailed(a, b).product;
}

int dead_blocks(const Partition& a, const Partition& b)
{
    return compose_detailed(a, b).dead_count();
}

namespace {

template <class NewPosition>
Transported transport(const Partition& p, int new_m, int new_n, NewPosition new_position)
{
    std::vector<int> labels(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        labels[static_cast<std::size_t>(new_position(i))] = p.label(i);
    }
    Transported t;
    t.partition = Partition::from_labels(new_m, new_n, labels);
    t.block_map.assign(static_cast<std::size_t>(p.block_count()), -1);
    for (int i = 0; i < p.size(); ++i) {
        t.block_map[static_cast<std::size_t>(p.label(i))] =
            t.partition.label(new_position(i));
    }
    return t;
}

} // namespace

Transported reflect_transport(const Partition& p)
{
    const int m = p.m();
    const int n = p.n();
    // Old In_i becomes Out_i, old Out_j becomes In_j.
    return transport(p, n, m, [m, n](int i) { return i < m ? n + i : i - m; });
}

Transported rotate_transport(const Partition& p)
{
    const int m = p.m();
    const int n = p.n();
    // Old In_i becomes Out_{m+1-i}, old Out_j becomes In_{n+1-j}.
    return transport(p, n, m, [m, n](int i) { return i < m ? n + (m - 1 - i) : n - 1 - (i - m); });
}

std::vector<int> in_kernel(const Partition& p)
{
    std::vector<int> labels(p.labels().begin(), p.labels().begin() + p.m());
    canonicalize(labels);
    return labels;
}

std::vector<int> out_kernel(const Partition& p)
{
    std::vector<int> labels(p.labels().begin() + p.m(), p.labels().end());
    canonicalize(labels);
    return labels;
}

namespace {

// Components of the join of the In-side and Out-side kernels.
std::vector<int> kernel_join(const Partition& p)
{
    require(p.m() == p.n(), ErrorCode::ShapeMismatch, "expected a square partition");
    const int n = p.n();
    DisjointSets sets(n);
    const auto left = in_kernel(p);
    const auto right = out_kernel(p);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (left[static_cast<std::size_t>(i)] == left[static_cast<std::size_t>(j)] ||
                right[static_cast<std::size_t>(i)] == right[static_cast<std::size_t>(j)]) {
                sets.unite(i, j);
            }
        }
    }
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        comp[static_cast<std::size_t>(i)] = sets.find(i);
    }
    canonicalize(comp);
    return comp;
}

} // namespace

bool is_irreducible(const Partition& p)
{
    const auto comp = kernel_join(p);
    return !comp.empty() && std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::optional<std::vector<IdempotentComponent>> idempotent_decomposition(const Partition& p)
{
    const auto comp = kernel_join(p);
    const int n = p.n();
    const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> block_comp(static_cast<std::size_t>(p.block_count()), -1);
    for (int i = 0; i < p.size(); ++i) {
        const int point = i < n ? i : i - n;
        int& slot = block_comp[static_cast<std::size_t>(p.label(i))];
        const int c = comp[static_cast<std::size_t>(point)];
        if (slot == -1) {
            slot = c;
        } else if (slot != c) {
            return std::nullopt;
        }
    }
    std::vector<IdempotentComponent> out(static_cast<std::size_t>(count));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].points.push_back(i + 1);
    }
    const auto stats = block_stats(p);
    for (std::size_t b = 0; b < stats.blocks.size(); ++b) {
        if (stats.blocks[b].kind() == BlockKind::Transversal) {
            auto& c = out[static_cast<std::size_t>(block_comp[b])];
            if (++c.rank > 1) {
                return std::nullopt;
            }
        }
    }
    return out;
}

void for_each_partition(int m, int n, const std::function<void(const Partition&)>& visit, int bound)
{
    require(m >= 0 && n >= 0, ErrorCode::Range, "negative layer size");
    require(m + n <= bound, ErrorCode::BoundExceeded,
            "enumeration of " + std::to_string(m + n) + " vertices exceeds bound " +
                std::to_string(bound));
    const int size = m + n;
    if (size == 0) {
        visit(Partition::from_labels(m, n, {}));
        return;
    }
    // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i)).
    std::vector<int> rgs(static_cast<std::size_t>(size), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(size), 0);
    while (true) {
        visit(Partition::from_labels(m, n, rgs));
        int i = size - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++rgs[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int k = i + 1; k < size; ++k) {
            rgs[static_cast<std::size_t>(k)] = 0;
            prefix_max[static_cast<std::size_t>(k)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
}

std::vector<Partition> enumerate_partitions(int m, int n, int bound)
{
    std::vector<Partition> out;
    for_each_partition(m, n, [&](const Partition& p) { out.push_back(p); }, bound);
    return out;
}

Partition random_partition(int m, int n, std::mt19937_64& rng)
{
    const int size = m + n;
    if (size == 0) {
        return Partition::from_labels(m, n, {});
    }
    std::uniform_int_distribution<int> blocks(1, size);
    std::uniform_int_distribution<int> pick(0, blocks(rng) - 1);
    std::vector<int> labels(static_cast<std::size_t>(size));
    for (auto& x : labels) {
        x = pick(rng);
    }
    return Partition::from_labels(m, n, labels);
}

} // namespace diagmon

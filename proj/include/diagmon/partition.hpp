// Set partitions of In_1..In_m, Out_1..Out_n and their composition.
#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace diagmon {

enum class Side : std::uint8_t { In = 0, Out = 1 };

struct Vertex {
    Side side = Side::In;
    int index = 1; // 1-based

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

template <class T, std::size_t N = 12>
using SmallVec = boost::container::small_vector<T, N>;

// Canonical form: one label per vertex, in the order In_1..In_m, Out_1..Out_n,
// where labels are assigned by first appearance. Block k is therefore the
// block whose least vertex is the k-th smallest.
struct Composite;

class Partition {
public:
    using Labels = SmallVec<int>;

    Partition() = default;

    static Partition from_blocks(int m, int n, const std::vector<std::vector<Vertex>>& blocks);
    static Partition from_labels(int m, int n, std::span<const int> labels);
    static Partition identity(int n);
    static Partition discrete(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int size() const noexcept { return m_ + n_; }
    int block_count() const noexcept { return blocks_; }

    int position(Vertex v) const;
    Vertex vertex_at(int position) const;
    int label(int position) const { return labels_[static_cast<std::size_t>(position)]; }
    int block_of(Vertex v) const { return label(position(v)); }
    const Labels& labels() const noexcept { return labels_; }

    std::vector<Vertex> block(int b) const;
    std::vector<std::vector<Vertex>> blocks() const;
    Vertex least_vertex(int b) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Partition& a, const Partition& b)
    {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.labels_ == b.labels_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    friend struct Composite;
    friend Composite compose_detailed(const Partition& a, const Partition& b);

    int m_ = 0;
    int n_ = 0;
    int blocks_ = 0;
    Labels labels_;
};

std::string to_string(const Partition& p);

enum class BlockKind : std::uint8_t { Left, Right, Transversal };

struct BlockStats {
    int in_vertices = 0;
    int out_vertices = 0;
    int size() const noexcept { return in_vertices + out_vertices; }
    BlockKind kind() const noexcept
    {
        if (in_vertices > 0 && out_vertices > 0) {
            return BlockKind::Transversal;
        }
        return in_vertices > 0 ? BlockKind::Left : BlockKind::Right;
    }
};

struct PartitionStats {
    std::vector<BlockStats> blocks;
    int rank = 0;
    int left_blocks = 0;
    int right_blocks = 0;
};

PartitionStats block_stats(const Partition& p);
int rank(const Partition& p);

// One merged class of the three-layer graph built while composing.
struct MergedClass {
    int alpha_blocks = 0;
    int beta_blocks = 0;
    int middle = 0;
};

// Composite of a: [l]->[m] with b: [m]->[n].
// classes[0..live) correspond to the product's blocks in order; the
// remaining classes are dead blocks, ordered by least middle vertex.
struct Composite {
    Partition product;
    SmallVec<int> alpha_target;
    SmallVec<int> beta_target;
    SmallVec<MergedClass> classes;
    int live = 0;

    int dead_count() const noexcept { return static_cast<int>(classes.size()) - live; }
    std::vector<int> dead_block_middle(int dead_index, const Partition& a) const;
};

Composite compose_detailed(const Partition& a, const Partition& b);
Partition compose(const Partition& a, const Partition& b);
int dead_blocks(const Partition& a, const Partition& b);

inline Partition operator*(const Partition& a, const Partition& b) { return compose(a, b); }

// A transformed partition together with where each old block went.
struct Transported {
    Partition partition;
    std::vector<int> block_map;
};

Transported reflect_transport(const Partition& p);
Transported rotate_transport(const Partition& p);
inline Partition reflect(const Partition& p) { return reflect_transport(p).partition; }
inline Partition rotate(const Partition& p) { return rotate_transport(p).partition; }

// Restrictions of a square partition to its In side and its Out side.
std::vector<int> in_kernel(const Partition& p);
std::vector<int> out_kernel(const Partition& p);

bool is_irreducible(const Partition& p);

struct IdempotentComponent {
    std::vector<int> points; // indices in 1..n
    int rank = 0;
};

// Structural idempotency test on a square partition: returns the forced
// decomposition into irreducible pieces when it is idempotent.
std::optional<std::vector<IdempotentComponent>> idempotent_decomposition(const Partition& p);
inline bool is_idempotent_structurally(const Partition& p)
{
    return idempotent_decomposition(p).has_value();
}

inline constexpr int kDefaultEnumerationBound = 10;

void for_each_partition(int m, int n, const std::function<void(const Partition&)>& visit,
                        int bound = kDefaultEnumerationBound);
std::vector<Partition> enumerate_partitions(int m, int n, int bound = kDefaultEnumerationBound);

Partition random_partition(int m, int n, std::mt19937_64& rng);

} // namespace diagmon

template <>
struct std::hash<diagmon::Partition> {
    std::size_t operator()(const diagmon::Partition& p) const noexcept { return p.hash(); }
};

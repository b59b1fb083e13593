#include "diagmon/error.hpp"
#include "diagmon/partition.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace diagmon;

namespace {

Partition cap()
{
    return Partition::from_blocks(0, 2, {{{Side::Out, 1}, {Side::Out, 2}}});
}

Partition cup()
{
    return Partition::from_blocks(2, 0, {{{Side::In, 1}, {Side::In, 2}}});
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("enumeration counts are Bell numbers")
{
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            CHECK(static_cast<long long>(enumerate_partitions(m, n).size()) == oracle::bell(m + n));
        }
    }
    CHECK(enumerate_partitions(1, 1).size() == 2);
    CHECK(enumerate_partitions(2, 2).size() == 15);
    CHECK(enumerate_partitions(3, 3).size() == 203);
}

TEST_CASE("enumeration yields distinct canonical partitions")
{
    auto all = enumerate_partitions(2, 3);
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& p : all) {
        CHECK(Partition::from_blocks(p.m(), p.n(), p.blocks()) == p);
    }
}

TEST_CASE("cap then cup closes one dead block")
{
    const auto c = compose_detailed(cap(), cup());
    CHECK(c.product.m() == 0);
    CHECK(c.product.n() == 0);
    CHECK(c.dead_count() == 1);
    CHECK(c.classes.back().alpha_blocks == 1);
    CHECK(c.classes.back().beta_blocks == 1);
    CHECK(c.classes.back().middle == 2);
    CHECK(c.dead_block_middle(0, cap()) == std::vector<int>{1, 2});
}

TEST_CASE("composition matches the connected-component oracle")
{
    for (int l = 0; l <= 2; ++l) {
        for (int m = 0; m <= 2; ++m) {
            for (int n = 0; n <= 2; ++n) {
                for (const auto& a : enumerate_partitions(l, m)) {
                    for (const auto& b : enumerate_partitions(m, n)) {
                        const auto expect = oracle::compose(a, b);
                        const auto got = compose_detailed(a, b);
                        REQUIRE(got.product == expect.product);
                        REQUIRE(got.dead_count() == expect.dead);
                    }
                }
            }
        }
    }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const auto a = random_partition(4, 5, rng);
        const auto b = random_partition(5, 3, rng);
        const auto expect = oracle::compose(a, b);
        const auto got = compose_detailed(a, b);
        REQUIRE(got.product == expect.product);
        REQUIRE(got.dead_count() == expect.dead);
    }
}

TEST_CASE("merged classes account for every block and middle vertex")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_partition(3, 4, rng);
        const auto b = random_partition(4, 2, rng);
        const auto c = compose_detailed(a, b);
        int alpha = 0, beta = 0, middle = 0;
        for (const auto& k : c.classes) {
            alpha += k.alpha_blocks;
            beta += k.beta_blocks;
            middle += k.middle;
        }
        CHECK(alpha == a.block_count());
        CHECK(beta == b.block_count());
        CHECK(middle == 4);
        for (int d = 0; d < c.dead_count(); ++d) {
            CHECK_FALSE(c.dead_block_middle(d, a).empty());
        }
    }
}

TEST_CASE("associativity and the dead-block cocycle on random triples")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 3000; ++t) {
        const auto a = random_partition(3, 3, rng);
        const auto b = random_partition(3, 4, rng);
        const auto c = random_partition(4, 2, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(dead_blocks(a, b) + dead_blocks(a * b, c) == dead_blocks(a, b * c) + dead_blocks(b, c));
    }
}

TEST_CASE("identity partitions are neutral")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_partition(3, 2, rng);
        CHECK(Partition::identity(3) * a == a);
        CHECK(a * Partition::identity(2) == a);
        CHECK(dead_blocks(Partition::identity(3), a) == 0);
    }
}

TEST_CASE("reflection and rotation are involutive anti-automorphisms")
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_partition(2, 3, rng);
        const auto b = random_partition(3, 3, rng);
        CHECK(reflect(reflect(a)) == a);
        CHECK(rotate(rotate(a)) == a);
        CHECK(reflect(a * b) == reflect(b) * reflect(a));
        CHECK(rotate(a * b) == rotate(b) * rotate(a));
        CHECK(dead_blocks(a, b) == dead_blocks(reflect(b), reflect(a)));
    }
}

TEST_CASE("rotation of a small transversal block")
{
    const auto a = Partition::from_blocks(1, 2, {{{Side::In, 1}, {Side::Out, 1}, {Side::Out, 2}}});
    const auto r = rotate(a);
    CHECK(r.m() == 2);
    CHECK(r.n() == 1);
    CHECK(r == Partition::from_blocks(2, 1, {{{Side::In, 1}, {Side::In, 2}, {Side::Out, 1}}}));
    const auto p = Partition::from_blocks(2, 1, {{{Side::In, 1}}, {{Side::In, 2}, {Side::Out, 1}}});
    CHECK(rotate(p) == Partition::from_blocks(1, 2, {{{Side::In, 1}, {Side::Out, 1}}, {{Side::Out, 2}}}));
}

TEST_CASE("transport maps blocks consistently")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_partition(3, 2, rng);
        const auto r = reflect_transport(a);
        for (int b = 0; b < a.block_count(); ++b) {
            for (const Vertex v : a.block(b)) {
                const Vertex w{v.side == Side::In ? Side::Out : Side::In, v.index};
                CHECK(r.partition.block_of(w) == r.block_map[static_cast<std::size_t>(b)]);
            }
        }
    }
}

TEST_CASE("dead blocks against a reflection count outer blocks")
{
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            for (const auto& a : enumerate_partitions(m, n)) {
                const auto s = block_stats(a);
                CHECK(dead_blocks(a, reflect(a)) == s.right_blocks);
                CHECK(dead_blocks(reflect(a), a) == s.left_blocks);
                CHECK(reflect(a) * a * reflect(a) == reflect(a));
                CHECK(a * reflect(a) * a == a);
            }
        }
    }
}

TEST_CASE("structural idempotents agree with squaring")
{
    for (int n = 0; n <= 3; ++n) {
        for (const auto& e : enumerate_partitions(n, n)) {
            CHECK(is_idempotent_structurally(e) == (e * e == e));
        }
    }
}

TEST_CASE("decomposition pieces are irreducible of rank at most one")
{
    for (const auto& e : enumerate_partitions(3, 3)) {
        const auto d = idempotent_decomposition(e);
        if (!d) {
            continue;
        }
        int covered = 0;
        for (const auto& piece : *d) {
            CHECK(piece.rank <= 1);
            covered += static_cast<int>(piece.points.size());
        }
        CHECK(covered == 3);
    }
    const auto id = Partition::identity(2);
    const auto d = idempotent_decomposition(id);
    REQUIRE(d);
    CHECK(d->size() == 2);
    CHECK_FALSE(is_irreducible(id));
    CHECK(is_irreducible(Partition::identity(1)));
}

TEST_CASE("validation errors")
{
    CHECK(code_of([] { Partition::from_blocks(1, 1, {{{Side::In, 1}}, {{Side::In, 1}, {Side::Out, 1}}}); }) ==
          ErrorCode::Overlap);
    CHECK(code_of([] { Partition::from_blocks(1, 1, {{{Side::In, 1}}}); }) == ErrorCode::Coverage);
    CHECK(code_of([] { Partition::from_blocks(1, 1, {{{Side::In, 2}, {Side::Out, 1}}}); }) == ErrorCode::Range);
    CHECK(code_of([] { compose(Partition::identity(2), Partition::identity(3)); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([] { enumerate_partitions(6, 6); }) == ErrorCode::BoundExceeded);
    CHECK(code_of([] { is_irreducible(Partition::discrete(1, 2)); }) == ErrorCode::ShapeMismatch);
}

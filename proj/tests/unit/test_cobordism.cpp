#include "diagmon/aux_monoids.hpp"
#include "diagmon/cobordism.hpp"
#include "diagmon/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace diagmon;

namespace {

SmallVec<Genus> random_genus(const Partition& p, std::mt19937_64& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    SmallVec<Genus> g(static_cast<std::size_t>(p.block_count()));
    for (auto& x : g) {
        x = d(rng);
    }
    return g;
}

ClosedSpectrum random_spectrum(std::mt19937_64& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    ClosedSpectrum s;
    for (int genus = 0; genus <= 3; ++genus) {
        s.add(genus, d(rng));
    }
    return s;
}

Cobordism random_cobordism(int m, int n, std::mt19937_64& rng, bool regular)
{
    const auto p = random_partition(m, n, rng);
    return make_cobordism(p, random_genus(p, rng, regular ? -2 : 0, 2), random_spectrum(rng, regular ? -2 : 0, 2),
                          regular);
}

std::vector<long long> as_ll(const SmallVec<Genus>& g)
{
    return {g.begin(), g.end()};
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

TEST_CASE("cap then cup yields one closed torus")
{
    const auto cap = plain_cobordism(Partition::from_blocks(0, 2, {{{Side::Out, 1}, {Side::Out, 2}}}));
    const auto cup = plain_cobordism(Partition::from_blocks(2, 0, {{{Side::In, 1}, {Side::In, 2}}}));
    const auto c = cap * cup;
    CHECK(c.genus.empty());
    CHECK(c.closed.at(1) == 1);
    CHECK(c.closed.total() == 1);
}

TEST_CASE("repeated squares of the full block gain genus")
{
    const auto e = plain_cobordism(Partition::from_labels(2, 2, std::vector<int>{0, 0, 0, 0}));
    const auto e3 = e * e * e;
    CHECK(e3.genus.size() == 1);
    CHECK(e3.genus[0] == 2);
}

TEST_CASE("composition matches the Euler characteristic oracle")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 3000; ++t) {
        const auto x = random_cobordism(3, 4, rng, true);
        const auto y = random_cobordism(4, 2, rng, true);
        const auto expect = oracle::euler_compose(x.base, as_ll(x.genus), y.base, as_ll(y.genus));
        const auto got = x * y;
        REQUIRE(got.base == expect.product);
        CHECK(as_ll(got.genus) == expect.genus);
        ClosedSpectrum s = x.closed + y.closed;
        for (auto g : expect.dead_genus) {
            s.add(g);
        }
        CHECK(got.closed == s);
    }
}

TEST_CASE("composition is associative and unital")
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 2000; ++t) {
        const auto x = random_cobordism(2, 3, rng, false);
        const auto y = random_cobordism(3, 3, rng, false);
        const auto z = random_cobordism(3, 2, rng, false);
        CHECK((x * y) * z == x * (y * z));
        CHECK(plain_cobordism(Partition::identity(2)) * x == x);
        CHECK(x * plain_cobordism(Partition::identity(3)) == x);
    }
}

TEST_CASE("regular involutions satisfy the regular star laws")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 2000; ++t) {
        const auto x = random_cobordism(2, 3, rng, true);
        const auto y = random_cobordism(3, 2, rng, true);
        CHECK(star(star(x)) == x);
        CHECK(x * star(x) * x == x);
        CHECK(star(x) * x * star(x) == star(x));
        const auto d = project_to_deformed(x);
        CHECK(star(star(d)) == d);
        CHECK(d * star(d) * d == d);
        CHECK(project_to_deformed(star(x)) == star(d));
        const auto l = project_to_labeled(x);
        const auto ly = project_to_labeled(y);
        CHECK(star(l * ly) == star(ly) * star(l));
        CHECK(project_to_labeled(star(x)) == star(l));
    }
}

TEST_CASE("deformed star reverses a product exactly when no outer block is created")
{
    for (int m = 0; m <= 2; ++m) {
        for (const auto& a : enumerate_partitions(2, m)) {
            for (const auto& b : enumerate_partitions(m, 2)) {
                const DeformedPartition x{a, 1, true};
                const DeformedPartition y{b, -1, true};
                const bool reverses = star(x * y) == star(y) * star(x);
                const auto sa = block_stats(a);
                const auto sb = block_stats(b);
                const auto sab = block_stats(a * b);
                const int outer = sa.right_blocks + sa.left_blocks + sb.right_blocks + sb.left_blocks -
                                  sab.right_blocks - sab.left_blocks;
                CHECK(reverses == (outer == 2 * dead_blocks(a, b)));
            }
        }
    }
}

TEST_CASE("right blocks plus left blocks against twice the dead blocks is not the criterion")
{
    // An identity factor never obstructs reversal, yet the count below is off.
    const auto id = Partition::identity(2);
    const auto b = Partition::from_blocks(2, 2, {{{Side::In, 1}, {Side::In, 2}}, {{Side::Out, 1}}, {{Side::Out, 2}}});
    const DeformedPartition x{id, 0, true};
    const DeformedPartition y{b, 0, true};
    CHECK(star(x * y) == star(y) * star(x));
    CHECK(block_stats(id).right_blocks + block_stats(b).left_blocks != 2 * dead_blocks(id, b));
}

TEST_CASE("projections are homomorphisms")
{
    std::mt19937_64 rng(24);
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_cobordism(2, 2, rng, false);
        const auto y = random_cobordism(2, 3, rng, false);
        CHECK(project_to_deformed(x * y) == project_to_deformed(x) * project_to_deformed(y));
        CHECK(project_to_labeled(x * y) == project_to_labeled(x) * project_to_labeled(y));
        CHECK((x * y).base == x.base * y.base);
    }
}

TEST_CASE("reflection and rotation reverse products and keep spectra")
{
    std::mt19937_64 rng(25);
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_cobordism(2, 3, rng, false);
        const auto y = random_cobordism(3, 1, rng, false);
        CHECK(sigma(x * y) == sigma(y) * sigma(x));
        CHECK(rho(x * y) == rho(y) * rho(x));
        CHECK(sigma(sigma(x)) == x);
        CHECK(rho(rho(x)) == x);
        CHECK(sigma(x).closed == x.closed);
        CHECK(project_to_deformed(sigma(x)) == sigma(project_to_deformed(x)));
        CHECK(project_to_labeled(rho(x)) == rho(project_to_labeled(x)));
    }
}

TEST_CASE("closed-form fiber products match iterated composition")
{
    std::mt19937_64 rng(26);
    for (int n = 1; n <= 3; ++n) {
        for (const auto& e : enumerate_partitions(n, n)) {
            if (!is_irreducible(e) || !(e * e == e)) {
                continue;
            }
            for (int t = 0; t < 50; ++t) {
                std::uniform_int_distribution<int> len(1, 6);
                std::vector<Cobordism> xs;
                for (int k = len(rng); k > 0; --k) {
                    xs.push_back(make_cobordism(e, random_genus(e, rng, -3, 3), random_spectrum(rng, -1, 2), true));
                }
                Cobordism prod = xs.front();
                for (std::size_t k = 1; k < xs.size(); ++k) {
                    prod = prod * xs[k];
                }
                CHECK(fiber_product(e, xs) == prod);
            }
        }
    }
}

TEST_CASE("fiber product rejects bad bases")
{
    const auto id2 = Partition::identity(2);
    std::vector<Cobordism> xs{plain_cobordism(id2)};
    CHECK(code_of([&] { fiber_product(id2, xs); }) == ErrorCode::NotIrreducible);
    const auto crossing = Partition::from_labels(2, 2, std::vector<int>{0, 1, 1, 0});
    std::vector<Cobordism> ys{plain_cobordism(crossing)};
    CHECK(code_of([&] { fiber_product(crossing, ys); }) == ErrorCode::NotIrreducible);
    const auto full = Partition::from_labels(1, 1, std::vector<int>{0, 0});
    std::vector<Cobordism> zs{plain_cobordism(Partition::discrete(1, 1))};
    CHECK(code_of([&] { fiber_product(full, zs); }) == ErrorCode::BaseMismatch);
}

TEST_CASE("validation and regularity errors")
{
    const auto p = Partition::identity(1);
    CHECK(code_of([&] { make_cobordism(p, {-1}, {}, false); }) == ErrorCode::Range);
    CHECK(code_of([&] { make_labeled(p, {0, 0}, false); }) == ErrorCode::Coverage);
    CHECK(code_of([&] { star(plain_cobordism(p)); }) == ErrorCode::NotRegular);
    CHECK(code_of([&] { plain_cobordism(p) * plain_cobordism(p, true); }) == ErrorCode::RegularityMismatch);
    CHECK(code_of([&] { make_deformed(p, -1, false); }) == ErrorCode::Range);
}

TEST_CASE("spectrum triples embed into cobordisms on the discrete base")
{
    std::mt19937_64 rng(27);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 500; ++t) {
        const SpectrumTriple x{bit(rng), random_spectrum(rng, 0, 2), bit(rng)};
        const SpectrumTriple y{bit(rng), random_spectrum(rng, 0, 2), bit(rng)};
        CHECK(triple_to_cobordism(triple_mul(x, y)) == triple_to_cobordism(x) * triple_to_cobordism(y));
        CHECK(triple_to_cobordism(triple_sigma(x)) == sigma(triple_to_cobordism(x)));
    }
}

TEST_CASE("labeled endomorphisms of one point form an ideal extension")
{
    // Through block with genus s <-> s; split blocks (l, r) <-> (l, r).
    const auto through = Partition::identity(1);
    const auto split = Partition::discrete(1, 1);
    const auto je = make_integer_extension();
    auto to_je = [&](const LabeledPartition& x) {
        return x.base == through ? je.unit(x.genus[0]) : je.pair(x.genus[0], x.genus[1]);
    };
    std::vector<LabeledPartition> elems;
    for (int s = 0; s <= 3; ++s) {
        elems.push_back(make_labeled(through, {s}, false));
        for (int r = 0; r <= 3; ++r) {
            elems.push_back(make_labeled(split, {s, r}, false));
        }
    }
    for (const auto& x : elems) {
        for (const auto& y : elems) {
            CHECK(to_je(x * y) == je.mul(to_je(x), to_je(y)));
        }
    }
}

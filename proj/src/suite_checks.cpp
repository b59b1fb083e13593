// The sixteen acceptance criteria.
#include "diagmon/annular.hpp"
#include "diagmon/aux_monoids.hpp"
#include "diagmon/cobordism.hpp"
#include "diagmon/error.hpp"
#include "diagmon/identities.hpp"
#include "diagmon/suite.hpp"
#include "diagmon/words.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace diagmon {

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t salt)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Counts checks and remembers the first failure.
class Tally {
public:
    explicit Tally(std::string what) : what_(std::move(what)) {}

    template <class Describe>
    void expect(bool ok, Describe&& describe)
    {
        ++checked_;
        if (!ok && failed_++ == 0) {
            first_ = describe();
        }
    }
    void expect(bool ok) { expect(ok, [] { return std::string(); }); }

    bool ok() const noexcept { return failed_ == 0 && checked_ > 0; }
    std::uint64_t checked() const noexcept { return checked_; }
    std::uint64_t failed() const noexcept { return failed_; }

    std::string line() const
    {
        std::string out = what_ + ": " + std::to_string(checked_) + " checked";
        if (failed_ > 0) {
            out += ", " + std::to_string(failed_) + " failed";
            if (!first_.empty()) {
                out += " (first: " + first_ + ")";
            }
        }
        return out;
    }

private:
    std::string what_;
    std::uint64_t checked_ = 0;
    std::uint64_t failed_ = 0;
    std::string first_;
};

CheckOutcome outcome(std::initializer_list<const Tally*> tallies, const std::string& extra = {})
{
    CheckOutcome out{true, {}};
    for (const Tally* t : tallies) {
        out.passed = out.passed && t->ok();
        if (!out.detail.empty()) {
            out.detail += "; ";
        }
        out.detail += t->line();
    }
    if (!extra.empty()) {
        out.detail += "; " + extra;
    }
    return out;
}

SmallVec<Genus> random_labels(Rng& rng, int count, int lo, int hi)
{
    SmallVec<Genus> g;
    for (int i = 0; i < count; ++i) {
        g.push_back(uniform(rng, lo, hi));
    }
    return g;
}

ClosedSpectrum random_spectrum(Rng& rng, int max_support, int genus_lo, int genus_hi, int count_lo, int count_hi)
{
    ClosedSpectrum s;
    const int support = uniform(rng, 0, max_support);
    for (int i = 0; i < support; ++i) {
        s.add(uniform(rng, genus_lo, genus_hi), uniform(rng, count_lo, count_hi));
    }
    return s;
}

Cobordism random_cobordism(Rng& rng, const Partition& base, bool regular)
{
    if (regular) {
        return make_cobordism(base, random_labels(rng, base.block_count(), -2, 2), random_spectrum(rng, 3, -1, 3, -2, 2),
                              true);
    }
    return make_cobordism(base, random_labels(rng, base.block_count(), 0, 3), random_spectrum(rng, 3, 0, 3, 0, 2),
                          false);
}

Partition random_square_or_not(Rng& rng, int max_side, int& m, int& n)
{
    m = uniform(rng, 0, max_side);
    n = uniform(rng, 0, max_side);
    return random_partition(m, n, rng);
}

std::vector<Partition> labeled_bases(int m, int n) { return enumerate_partitions(m, n); }

// Every labeling of every partition of shape (m, n) with labels in [lo, hi].
std::vector<LabeledPartition> all_labeled(int m, int n, int lo, int hi)
{
    std::vector<LabeledPartition> out;
    for (const auto& p : labeled_bases(m, n)) {
        SmallVec<Genus> g(static_cast<std::size_t>(p.block_count()), lo);
        while (true) {
            out.push_back(make_labeled(p, g, true));
            std::size_t i = 0;
            while (i < g.size() && ++g[i] > hi) {
                g[i++] = lo;
            }
            if (i == g.size()) {
                break;
            }
        }
    }
    return out;
}

struct CobordismHash {
    std::size_t operator()(const Cobordism& c) const noexcept
    {
        std::size_t h = c.base.hash();
        auto mix = [&](std::int64_t v) { h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        for (Genus g : c.genus) {
            mix(g);
        }
        mix(-7777);
        for (const auto& [g, k] : c.closed.entries()) {
            mix(g);
            mix(k);
        }
        return h;
    }
};

template <class T, class Hash = std::hash<T>>
class Interner {
public:
    int id(const T& x)
    {
        const auto [it, inserted] = index_.try_emplace(x, static_cast<int>(values_.size()));
        if (inserted) {
            values_.push_back(x);
        }
        return it->second;
    }
    const T& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    int size() const noexcept { return static_cast<int>(values_.size()); }

private:
    std::unordered_map<T, int, Hash> index_;
    std::vector<T> values_;
};

struct CobordismSemigroup {
    using value_type = Cobordism;
    value_type mul(const value_type& a, const value_type& b) const { return compose(a, b); }
};

struct PartitionMonoidOps {
    using value_type = Partition;
    value_type mul(const value_type& a, const value_type& b) const { return compose(a, b); }
};

// 1. Partition composition: associativity and the dead-block cocycle law.
CheckOutcome partition_axioms(std::uint64_t seed)
{
    constexpr int kMax = 3;
    constexpr std::uint64_t kTripleLimit = 1'000'000;
    using Pool = std::vector<Partition>;
    std::array<std::array<Pool, kMax + 1>, kMax + 1> pool;
    std::array<std::array<std::unordered_map<Partition, int>, kMax + 1>, kMax + 1> index;
    for (int a = 0; a <= kMax; ++a) {
        for (int b = 0; b <= kMax; ++b) {
            pool[a][b] = enumerate_partitions(a, b);
            for (std::size_t i = 0; i < pool[a][b].size(); ++i) {
                index[a][b].emplace(pool[a][b][i], static_cast<int>(i));
            }
        }
    }
    struct Cell {
        int product = 0;
        int dead = 0;
    };
    // table[a][b][c][x * |P(b,c)| + y] describes x y for x in P(a,b), y in P(b,c).
    std::vector<Cell> table[kMax + 1][kMax + 1][kMax + 1];
    for (int a = 0; a <= kMax; ++a) {
        for (int b = 0; b <= kMax; ++b) {
            for (int c = 0; c <= kMax; ++c) {
                auto& t = table[a][b][c];
                t.reserve(pool[a][b].size() * pool[b][c].size());
                for (const auto& x : pool[a][b]) {
                    for (const auto& y : pool[b][c]) {
                        const auto comp = compose_detailed(x, y);
                        t.push_back({index[a][c].at(comp.product), comp.dead_count()});
                    }
                }
            }
        }
    }

    Tally assoc("associativity over all small shapes");
    Tally cocycle("dead-block cocycle law over all small shapes");
    int shapes = 0;
    for (int a = 0; a <= kMax; ++a) {
        for (int b = 0; b <= kMax; ++b) {
            for (int c = 0; c <= kMax; ++c) {
                for (int d = 0; d <= kMax; ++d) {
                    const std::size_t nx = pool[a][b].size(), ny = pool[b][c].size(), nz = pool[c][d].size();
                    if (static_cast<std::uint64_t>(nx) * ny * nz > kTripleLimit) {
                        continue;
                    }
                    ++shapes;
                    const auto& xy_t = table[a][b][c];
                    const auto& yz_t = table[b][c][d];
                    const auto& left_t = table[a][c][d];
                    const auto& right_t = table[a][b][d];
                    const std::size_t n_ad_right = pool[b][d].size();
                    for (std::size_t x = 0; x < nx; ++x) {
                        for (std::size_t y = 0; y < ny; ++y) {
                            const Cell xy = xy_t[x * ny + y];
                            for (std::size_t z = 0; z < nz; ++z) {
                                const Cell yz = yz_t[y * nz + z];
                                const Cell left = left_t[static_cast<std::size_t>(xy.product) * nz + z];
                                const Cell right = right_t[x * n_ad_right + static_cast<std::size_t>(yz.product)];
                                auto describe = [&] {
                                    return to_string(pool[a][b][x]) + " " + to_string(pool[b][c][y]) + " " +
                                           to_string(pool[c][d][z]);
                                };
                                assoc.expect(left.product == right.product, describe);
                                cocycle.expect(xy.dead + left.dead == yz.dead + right.dead, describe);
                            }
                        }
                    }
                }
            }
        }
    }

    Tally random("random triples on 4 points");
    Rng rng = make_rng(seed, 1);
    for (int i = 0; i < 10'000; ++i) {
        const auto x = random_partition(4, 4, rng);
        const auto y = random_partition(4, 4, rng);
        const auto z = random_partition(4, 4, rng);
        const auto xy = compose_detailed(x, y);
        const auto yz = compose_detailed(y, z);
        const auto left = compose_detailed(xy.product, z);
        const auto right = compose_detailed(x, yz.product);
        random.expect(left.product == right.product &&
                          xy.dead_count() + left.dead_count() == yz.dead_count() + right.dead_count(),
                      [&] { return to_string(x) + " " + to_string(y) + " " + to_string(z); });
    }
    return outcome({&assoc, &cocycle, &random}, std::to_string(shapes) + " shape triples enumerated");
}

// 2. Reflection on partitions and dead blocks of x x*, x* x.
CheckOutcome partition_star(std::uint64_t)
{
    Tally laws("involution and regularity laws");
    Tally reversal("(xy)* = y*x*");
    Tally dead("dead blocks of x x* and x* x");
    for (int n : {2, 3}) {
        const auto pool = enumerate_partitions(n, n);
        for (const auto& a : pool) {
            const auto s = reflect(a);
            laws.expect(reflect(s) == a && compose(compose(a, s), a) == a && compose(compose(s, a), s) == s,
                        [&] { return to_string(a); });
            const auto stats = block_stats(a);
            dead.expect(dead_blocks(a, s) == stats.right_blocks && dead_blocks(s, a) == stats.left_blocks,
                        [&] { return to_string(a); });
        }
        std::vector<Partition> stars;
        for (const auto& a : pool) {
            stars.push_back(reflect(a));
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = 0; j < pool.size(); ++j) {
                reversal.expect(reflect(compose(pool[i], pool[j])) == compose(stars[j], stars[i]),
                                [&] { return to_string(pool[i]) + " " + to_string(pool[j]); });
            }
        }
    }
    return outcome({&laws, &reversal, &dead});
}

// 3. Associativity of cobordism composition.
CheckOutcome cobordism_associativity(std::uint64_t seed)
{
    std::vector<Cobordism> elems;
    for (const auto& l : all_labeled(2, 2, -1, 1)) {
        elems.push_back(make_cobordism(l.base, l.genus, {}, true));
    }
    const auto e = elems.size();
    // Products are interned so that each triple costs two table lookups.
    Interner<Cobordism, CobordismHash> mids;
    std::vector<int> xy(e * e);
    for (std::size_t x = 0; x < e; ++x) {
        for (std::size_t y = 0; y < e; ++y) {
            xy[x * e + y] = mids.id(compose(elems[x], elems[y]));
        }
    }
    const auto d = static_cast<std::size_t>(mids.size());
    Interner<Cobordism, CobordismHash> results;
    std::vector<int> left(d * e);
    std::vector<int> right(e * d);
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t z = 0; z < e; ++z) {
            left[p * e + z] = results.id(compose(mids[static_cast<int>(p)], elems[z]));
            right[z * d + p] = results.id(compose(elems[z], mids[static_cast<int>(p)]));
        }
    }
    Tally exhaustive("exhaustive triples over 2 points, labels in [-1,1]");
    for (std::size_t x = 0; x < e; ++x) {
        for (std::size_t y = 0; y < e; ++y) {
            const auto pxy = static_cast<std::size_t>(xy[x * e + y]);
            for (std::size_t z = 0; z < e; ++z) {
                const auto pyz = static_cast<std::size_t>(xy[y * e + z]);
                exhaustive.expect(left[pxy * e + z] == right[x * d + pyz], [&] {
                    return to_string(elems[x]) + " | " + to_string(elems[y]) + " | " + to_string(elems[z]);
                });
            }
        }
    }

    Tally random("random triples with spectra");
    Rng rng = make_rng(seed, 3);
    for (int i = 0; i < 10'000; ++i) {
        std::array<int, 4> sides{};
        for (auto& s : sides) {
            s = uniform(rng, 0, 4);
        }
        const auto x = random_cobordism(rng, random_partition(sides[0], sides[1], rng), true);
        const auto y = random_cobordism(rng, random_partition(sides[1], sides[2], rng), true);
        const auto z = random_cobordism(rng, random_partition(sides[2], sides[3], rng), true);
        random.expect(compose(compose(x, y), z) == compose(x, compose(y, z)),
                      [&] { return to_string(x) + " | " + to_string(y) + " | " + to_string(z); });
    }
    return outcome({&exhaustive, &random}, std::to_string(e) + " elements, " + std::to_string(d) + " distinct products");
}

// 4. Regularity of the stars on deformed partitions and cobordisms.
CheckOutcome regular_stars(std::uint64_t seed)
{
    Rng rng = make_rng(seed, 4);
    Tally deformed("deformed partitions");
    Tally cob("cobordisms");
    for (int i = 0; i < 10'000; ++i) {
        int m = 0;
        int n = 0;
        const auto base = random_square_or_not(rng, 3, m, n);
        const auto x = make_deformed(base, uniform(rng, -3, 3), true);
        const auto xs = star(x);
        deformed.expect(compose(compose(x, xs), x) == x && compose(compose(xs, x), xs) == xs && star(xs) == x,
                        [&] { return to_string(base) + " s=" + std::to_string(x.s); });
        const auto c = random_cobordism(rng, base, true);
        const auto cs = star(c);
        cob.expect(compose(compose(c, cs), c) == c && compose(compose(cs, c), cs) == cs && star(cs) == c,
                   [&] { return to_string(c); });
    }
    return outcome({&deformed, &cob});
}

// 5. Reversal law for labeled partitions; stated reversal criterion for deformed partitions.
CheckOutcome reversal_laws(std::uint64_t)
{
    const auto elems = all_labeled(2, 2, -2, 2);
    std::vector<LabeledPartition> stars;
    for (const auto& x : elems) {
        stars.push_back(star(x));
    }
    Tally labeled("labeled partitions, (xy)* = y*x*");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const auto& x = elems[i];
            const auto& y = elems[j];
            labeled.expect(star(compose(x, y)) == compose(stars[j], stars[i]), [&] {
                return to_string(make_cobordism(x.base, x.genus, {}, true)) + " | " +
                       to_string(make_cobordism(y.base, y.genus, {}, true));
            });
        }
    }

    Tally stated("deformed partitions, reversal iff rb(a) + lb(b) = 2 b(a,b)");
    Tally corrected("deformed partitions, reversal iff rb(a)+lb(a)+rb(b)+lb(b)-rb(ab)-lb(ab) = 2 b(a,b)");
    const auto bases = enumerate_partitions(2, 2);
    for (const auto& a : bases) {
        for (const auto& b : bases) {
            const auto sa = block_stats(a);
            const auto sb = block_stats(b);
            const auto comp = compose_detailed(a, b);
            const auto sab = block_stats(comp.product);
            const int dead = comp.dead_count();
            for (int s = -2; s <= 2; ++s) {
                for (int t = -2; t <= 2; ++t) {
                    const auto x = make_deformed(a, s, true);
                    const auto y = make_deformed(b, t, true);
                    const bool reverses = star(compose(x, y)) == compose(star(y), star(x));
                    const bool claim = sa.right_blocks + sb.left_blocks == 2 * dead;
                    const bool fixed = sa.right_blocks + sa.left_blocks + sb.right_blocks + sb.left_blocks -
                                           sab.right_blocks - sab.left_blocks ==
                                       2 * dead;
                    auto describe = [&] {
                        return to_string(a) + " s=" + std::to_string(s) + ", " + to_string(b) + " s=" +
                               std::to_string(t) + ": reversal " + (reverses ? "holds" : "fails") +
                               ", condition " + (claim ? "holds" : "fails");
                    };
                    stated.expect(reverses == claim, describe);
                    corrected.expect(reverses == fixed, describe);
                }
            }
        }
    }
    return outcome({&labeled, &stated}, corrected.line() + " (informational)");
}

// 6. Structural idempotency verdict against e e = e.
CheckOutcome idempotent_structure(std::uint64_t)
{
    Tally agree("structural verdict vs e e = e");
    int idempotents = 0;
    for (int n = 0; n <= 4; ++n) {
        for_each_partition(n, n, [&](const Partition& p) {
            const bool direct = compose(p, p) == p;
            idempotents += direct ? 1 : 0;
            agree.expect(is_idempotent_structurally(p) == direct, [&] { return to_string(p); });
        });
    }
    return outcome({&agree}, std::to_string(idempotents) + " idempotents for n <= 4");
}

std::vector<Partition> irreducible_idempotents(int max_n)
{
    std::vector<Partition> out;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& p : enumerate_partitions(n, n)) {
            if (compose(p, p) == p && is_irreducible(p)) {
                out.push_back(p);
            }
        }
    }
    return out;
}

// 7. Closed-form fiber products and the Zimin rearrangement on fibers.
CheckOutcome fiber_products(std::uint64_t seed)
{
    Rng rng = make_rng(seed, 7);
    const auto bases = irreducible_idempotents(3);
    Tally oracle("closed form vs iterated composition");
    Tally zimin_rearranged("Z3 = x1x3x1x2x1x2x1 on fibers");
    const Identity id{plain(zimin(3)), plain(Word{1, 3, 1, 2, 1, 2, 1})};
    const CobordismSemigroup ops;
    for (const auto& e : bases) {
        for (int i = 0; i < 1000; ++i) {
            const int len = uniform(rng, 1, 6);
            std::vector<Cobordism> xs;
            for (int l = 0; l < len; ++l) {
                xs.push_back(random_cobordism(rng, e, false));
            }
            Cobordism direct = xs.front();
            for (std::size_t l = 1; l < xs.size(); ++l) {
                direct = compose(direct, xs[l]);
            }
            oracle.expect(fiber_product(e, xs) == direct,
                          [&] { return to_string(e) + " length " + std::to_string(len); });

            std::vector<Cobordism> values{random_cobordism(rng, e, false), random_cobordism(rng, e, false),
                                          random_cobordism(rng, e, false)};
            const std::span<const Cobordism> view(values);
            zimin_rearranged.expect(evaluate(id.lhs, view, ops) == evaluate(id.rhs, view, ops),
                                    [&] { return to_string(e); });
        }
    }
    return outcome({&oracle, &zimin_rearranged}, std::to_string(bases.size()) + " irreducible idempotent bases");
}

// 8. The spectrum-triple morphism onto the five-element semigroup.
CheckOutcome spectrum_morphism(std::uint64_t)
{
    Tally table("six-element table against its defining rule");
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            const auto x = static_cast<A21>(a);
            const auto y = static_cast<A21>(b);
            A21 want = A21::Zero;
            if (x == A21::One) {
                want = y;
            } else if (y == A21::One) {
                want = x;
            } else if (x != A21::Zero && y != A21::Zero) {
                const int xi = (a - 1) / 2, xj = (a - 1) % 2, yk = (b - 1) / 2, yl = (b - 1) % 2;
                want = (xj == 1 && yk == 1) ? A21::Zero : a21_pair(xi, yl);
            }
            table.expect(a21_mul(x, y) == want, [&] { return to_string(x) + " " + to_string(y); });
        }
    }
    table.expect(a21_mul(a21_pair(0, 1), a21_pair(1, 0)) == A21::Zero, [] { return std::string("(0,1)(1,0)"); });

    std::vector<SpectrumTriple> elems;
    for (int code = 0; code < 81; ++code) {
        ClosedSpectrum s;
        int c = code;
        for (int g = 0; g <= 3; ++g, c /= 3) {
            if (c % 3 != 0) {
                s.add(g, c % 3);
            }
        }
        for (int i = 0; i <= 1; ++i) {
            for (int j = 0; j <= 1; ++j) {
                elems.push_back({i, s, j});
            }
        }
    }
    Tally hom("morphism law on triples");
    Tally cob("triples multiply as cobordisms");
    for (const auto& x : elems) {
        for (const auto& y : elems) {
            const auto xy = triple_mul(x, y);
            hom.expect(triple_to_a21(xy) == a21_mul(triple_to_a21(x), triple_to_a21(y)),
                       [&] { return to_string(x.closed) + " " + to_string(y.closed); });
            cob.expect(triple_to_cobordism(xy) == compose(triple_to_cobordism(x), triple_to_cobordism(y)));
        }
    }
    return outcome({&table, &hom, &cob});
}

std::optional<ErrorCode> error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

std::vector<AffineDiagram> affine_pool(int max_side, int bound)
{
    std::vector<AffineDiagram> out;
    for (int m = 0; m <= max_side; ++m) {
        for (int n = 0; n <= max_side; ++n) {
            if ((m + n) % 2 == 0) {
                auto v = enumerate_affine(m, n, bound);
                out.insert(out.end(), v.begin(), v.end());
            }
        }
    }
    return out;
}

// Diagrams grouped by shape, so composable pairs can be drawn.
class ShapedPool {
public:
    ShapedPool(int max_side, int bound)
    {
        for (const auto& a : affine_pool(max_side, bound)) {
            by_shape_[{a.m(), a.n()}].push_back(a);
        }
        for (const auto& [shape, v] : by_shape_) {
            shapes_.push_back(shape);
        }
    }

    const AffineDiagram& any(Rng& rng) const
    {
        const auto& shape = shapes_[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shapes_.size()) - 1))];
        return pick(rng, shape.first, shape.second);
    }

    const AffineDiagram& from(Rng& rng, int m) const
    {
        std::vector<std::pair<int, int>> options;
        for (const auto& s : shapes_) {
            if (s.first == m) {
                options.push_back(s);
            }
        }
        const auto& s = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
        return pick(rng, s.first, s.second);
    }

private:
    const AffineDiagram& pick(Rng& rng, int m, int n) const
    {
        const auto& v = by_shape_.at({m, n});
        return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
    }

    std::map<std::pair<int, int>, std::vector<AffineDiagram>> by_shape_;
    std::vector<std::pair<int, int>> shapes_;
};

AffineDiagram power(const AffineDiagram& x, int t)
{
    AffineDiagram out = x;
    for (int i = 1; i < t; ++i) {
        out = compose(out, x);
    }
    return out;
}

// 9. Affine diagrams: validation, rotation powers, shift laws.
CheckOutcome affine_laws(std::uint64_t seed)
{
    Tally accepted("generators validate");
    for (int n = 1; n <= 5; ++n) {
        std::vector<AffineDiagram> gens{zeta(n), zeta_inverse(n)};
        for (int r = -2; r <= 2; ++r) {
            gens.push_back(lambda_power(n, r));
        }
        for (int i = 1; i <= n && n >= 2; ++i) {
            gens.push_back(cup_cap(n, i));
        }
        for (const auto& g : gens) {
            accepted.expect(!error_of([&] { validate_affine(g.m(), g.n(), g.partners()); }),
                            [&] { return to_string(g); });
        }
    }

    Tally rejected("crossing matchings rejected");
    using S = std::vector<std::pair<APoint, APoint>>;
    const std::vector<std::pair<int, S>> crossings{
        {2, {{{0, Side::In, 1}, {0, Side::Out, 2}}, {{0, Side::In, 2}, {0, Side::Out, 1}}}},
        {2, {{{0, Side::In, 1}, {0, Side::Out, 2}}, {{0, Side::In, 2}, {-1, Side::Out, 1}}}},
        {2, {{{0, Side::In, 1}, {1, Side::In, 2}}, {{0, Side::Out, 1}, {0, Side::Out, 2}}}},
        {4, {{{0, Side::In, 1}, {0, Side::In, 3}}, {{0, Side::In, 2}, {0, Side::In, 4}},
             {{0, Side::Out, 1}, {0, Side::Out, 2}}, {{0, Side::Out, 3}, {0, Side::Out, 4}}}},
        {3, {{{0, Side::In, 1}, {0, Side::Out, 1}}, {{0, Side::In, 2}, {0, Side::Out, 3}},
             {{0, Side::In, 3}, {0, Side::Out, 2}}}},
    };
    for (const auto& [n, strings] : crossings) {
        const auto code = error_of([&] { AffineDiagram::from_strings(n, n, strings); });
        rejected.expect(code == ErrorCode::Crossing, [&] { return std::to_string(n) + "-point matching accepted"; });
    }

    Tally rotation("zeta^n = lambda");
    for (int n = 1; n <= 5; ++n) {
        rotation.expect(power(zeta(n), n) == lambda_power(n, 1), [&] { return "n = " + std::to_string(n); });
    }

    Tally shifts("lambda shifts: strings, transversals, centrality");
    Rng rng = make_rng(seed, 9);
    const ShapedPool pool(4, 3);
    for (int i = 0; i < 1000; ++i) {
        const auto& a = pool.any(rng);
        const int r = uniform(rng, -3, 3);
        const auto left = compose(lambda_power(a.m(), r), a);
        const auto right = compose(a, lambda_power(a.n(), r));
        bool ok = left == right && left == apply_lambda(a, r);
        for (int p = 0; p < a.m() + a.n() && ok; ++p) {
            const APoint from = a.fundamental_point(p);
            const APoint to = a.partners()[static_cast<std::size_t>(p)];
            const APoint got = left.partners()[static_cast<std::size_t>(p)];
            if (from.side == to.side) {
                ok = got == to;
            } else {
                ok = got == to.shifted(from.side == Side::In ? r : -r);
            }
        }
        shifts.expect(ok, [&] { return to_string(a) + " r=" + std::to_string(r); });
    }

    Tally gap("same annular image iff related by a lambda power");
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            if ((m + n) % 2 != 0) {
                continue;
            }
            const auto diagrams = enumerate_affine(m, n, 2);
            std::vector<Partition> images;
            for (const auto& a : diagrams) {
                images.push_back(project_to_ann(a));
            }
            for (std::size_t i = 0; i < diagrams.size(); ++i) {
                const auto& a = diagrams[i];
                if (a.rank() == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < diagrams.size(); ++j) {
                    const auto& b = diagrams[j];
                    if (b.rank() != a.rank()) {
                        continue;
                    }
                    const auto q = shift_gap(a, b);
                    const bool same = images[i] == images[j];
                    gap.expect(same == q.has_value() && (!q || apply_lambda(a, *q) == b),
                               [&] { return to_string(a) + " vs " + to_string(b); });
                }
            }
        }
    }
    return outcome({&accepted, &rejected, &rotation, &shifts, &gap});
}

AffineDiagram wrap_element()
{
    return AffineDiagram::from_strings(2, 2, {{{0, Side::In, 1}, {0, Side::In, 2}}, {{0, Side::Out, 2}, {1, Side::Out, 1}}});
}

AffinePair random_pair(Rng& rng, const AffineDiagram& a)
{
    return make_affine_pair(a, a.rank() == 0 ? uniform(rng, 0, 2) : 0, false);
}

AffineTriple random_triple(Rng& rng, const AffineDiagram& a)
{
    return make_affine_triple(a, a.rank() == 0 ? uniform(rng, 0, 2) : 0, uniform(rng, 0, 2), false);
}

// 10. Circle counting and associativity with circle counts.
CheckOutcome circle_counts(std::uint64_t seed)
{
    Tally examples("cup-cap and wrap examples");
    const auto e = cup_cap(2, 1);
    const auto ee = compose_detailed(e, e);
    examples.expect(ee.zero_circles == 1 && ee.wrapping_circles == 0 && ee.diagram == e,
                    [&] { return "cup-cap gives b0=" + std::to_string(ee.zero_circles); });
    const auto w = wrap_element();
    const auto ww = compose_detailed(w, w);
    examples.expect(ww.wrapping_circles == 1 && ww.zero_circles == 0 && ww.diagram.rank() == 0,
                    [&] { return "wrap element gives bw=" + std::to_string(ww.wrapping_circles); });

    Rng rng = make_rng(seed, 10);
    const ShapedPool pool(3, 2);
    Tally pairs("associativity with wrapping counts");
    Tally triples("associativity with both counts");
    Tally invariant("no wrapping circles beside transversal strings");
    for (int i = 0; i < 10'000; ++i) {
        const auto& a = pool.any(rng);
        const auto& b = pool.from(rng, a.n());
        const auto& c = pool.from(rng, b.n());
        const auto x = random_pair(rng, a), y = random_pair(rng, b), z = random_pair(rng, c);
        const auto left = compose(compose(x, y), z);
        pairs.expect(left == compose(x, compose(y, z)),
                     [&] { return to_string(a) + " " + to_string(b) + " " + to_string(c); });
        const auto xt = random_triple(rng, a), yt = random_triple(rng, b), zt = random_triple(rng, c);
        const auto left_t = compose(compose(xt, yt), zt);
        triples.expect(left_t == compose(xt, compose(yt, zt)),
                       [&] { return to_string(a) + " " + to_string(b) + " " + to_string(c); });
        invariant.expect((left.skeleton.rank() == 0 || left.k == 0) && (left_t.skeleton.rank() == 0 || left_t.k == 0));
    }
    return outcome({&examples, &pairs, &triples, &invariant});
}

// 11. The annular monoid on three points.
CheckOutcome ann3_structure(std::uint64_t)
{
    const auto ann = build_ann_monoid(3);
    const auto& m = ann.monoid;
    using E = FiniteMonoid::Element;
    Tally units("unit group cyclic of order 3");
    Tally band("rank-1 elements form a 3x3 rectangular band ideal");
    const E one = *m.identity();
    std::vector<E> unit_list;
    std::vector<E> rank1;
    for (E x = 0; x < m.size(); ++x) {
        for (E y = 0; y < m.size(); ++y) {
            if (m.mul(x, y) == one && m.mul(y, x) == one) {
                unit_list.push_back(x);
                break;
            }
        }
        if (ann.ranks[x] == 1) {
            rank1.push_back(x);
        }
    }
    units.expect(unit_list.size() == 3, [&] { return std::to_string(unit_list.size()) + " units"; });
    bool generator = false;
    for (E u : unit_list) {
        generator = generator || m.index_period(u) == std::pair<std::uint64_t, std::uint64_t>{1, 3};
    }
    units.expect(generator, [] { return std::string("no unit of order 3"); });

    band.expect(rank1.size() == 9 && unit_list.size() + rank1.size() == m.size(),
                [&] { return std::to_string(rank1.size()) + " rank-1 elements of " + std::to_string(m.size()); });
    std::set<std::set<E>> rows;
    std::set<std::set<E>> columns;
    for (E x : rank1) {
        std::set<E> row;
        std::set<E> column;
        for (E y : rank1) {
            band.expect(m.mul(m.mul(x, y), x) == x);
            for (E z : rank1) {
                band.expect(m.mul(m.mul(x, y), z) == m.mul(x, z));
            }
            row.insert(m.mul(x, y));
            column.insert(m.mul(y, x));
        }
        rows.insert(row);
        columns.insert(column);
        for (E g = 0; g < m.size(); ++g) {
            band.expect(ann.ranks[m.mul(g, x)] == 1 && ann.ranks[m.mul(x, g)] == 1);
        }
    }
    band.expect(rows.size() == 3 && columns.size() == 3, [&] {
        return std::to_string(rows.size()) + " rows, " + std::to_string(columns.size()) + " columns";
    });
    return outcome({&units, &band}, std::to_string(m.size()) + " elements");
}

// Returns q != 0 with x^t = lambda^((t-1)q) x for every t <= 8.
std::optional<int> linear_drift(const AffineDiagram& x)
{
    if (x.rank() == 0) {
        return std::nullopt;
    }
    AffineDiagram p = x;
    std::optional<int> step;
    for (int t = 2; t <= 8; ++t) {
        p = compose(p, x);
        if (p.rank() != x.rank()) {
            return std::nullopt;
        }
        const auto gap = shift_gap(x, p);
        if (!gap) {
            return std::nullopt;
        }
        if (t == 2) {
            step = *gap;
        } else if (*gap != (t - 1) * *step) {
            return std::nullopt;
        }
    }
    return step && *step != 0 ? step : std::nullopt;
}

// 12. Mirror pairs of rank-1 idempotents with a product of infinite order.
CheckOutcome mirror_idempotents(std::uint64_t)
{
    std::vector<AffineDiagram> idempotents;
    for (const auto& a : enumerate_affine(3, 3, 2)) {
        if (a.rank() == 1 && compose(a, a) == a) {
            idempotents.push_back(a);
        }
    }
    std::set<AffineDiagram> space(idempotents.begin(), idempotents.end());
    auto search = [&](auto mirror) -> std::optional<std::pair<AffineDiagram, int>> {
        for (const auto& a : idempotents) {
            const auto b = mirror(a);
            if (!space.contains(b)) {
                continue;
            }
            if (const auto q = linear_drift(compose(a, b))) {
                return std::pair{a, *q};
            }
        }
        return std::nullopt;
    };
    const auto by_sigma = search([](const AffineDiagram& a) { return sigma(a); });
    const auto by_rho = search([](const AffineDiagram& a) { return rho(a); });

    std::string detail = std::to_string(idempotents.size()) + " rank-1 idempotents with offsets <= 2; ";
    if (by_sigma) {
        detail += "reflection pair found: " + to_string(by_sigma->first) + " drift " + std::to_string(by_sigma->second);
    } else {
        detail += "no reflection pair (a a^sigma is idempotent for every a)";
    }
    detail += "; ";
    if (by_rho) {
        detail += "rotation pair found: " + to_string(by_rho->first) + " drift " + std::to_string(by_rho->second);
    } else {
        detail += "no rotation pair";
    }
    return {by_sigma.has_value(), detail};
}

std::vector<Word> words_up_to(int letters, int max_len)
{
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Letter x = 1; x <= letters; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// 13. Extreme representations and the decision procedures.
CheckOutcome word_engine(std::uint64_t seed)
{
    Tally example("worked example decomposition");
    const auto parsed = parse_word("x^3yxytz^4xyz");
    const Word w = letters_of(parsed.word);
    const auto rep = extreme_rep(w);
    std::vector<std::string> blocks;
    for (const auto& b : rep.blocks) {
        blocks.push_back(format_powers(b, parsed.alphabet));
    }
    example.expect(format_word(rep.extremes, parsed.alphabet) == "xytzxyz" &&
                       blocks == std::vector<std::string>{"x^2", "xy", "1", "z^3", "1", "1"} && normal_form(w) == w,
                   [&] { return format_word(rep.extremes, parsed.alphabet); });

    const auto words = words_up_to(3, 7);
    std::vector<Word> nf;
    std::vector<Word> cf;
    std::vector<ExtremeRep> reps;
    for (const auto& u : words) {
        nf.push_back(normal_form(u));
        cf.push_back(canonical_form(u));
        reps.push_back(extreme_rep(u));
    }
    Tally extremes("M-identities share extreme words and balanced blocks");
    Tally m_forms("normal forms decide M");
    Tally n_forms("canonical forms decide N");
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const auto& u = words[i];
            const auto& v = words[j];
            auto describe = [&] { return format_word(u, parsed.alphabet) + " = " + format_word(v, parsed.alphabet); };
            if (u.size() != v.size()) {
                // Unbalanced: neither criterion holds and the forms differ in length.
                m_forms.expect(!holds_in_M(u, v), describe);
                n_forms.expect(!holds_in_N(u, v), describe);
                continue;
            }
            const bool in_m = holds_in_M(u, v);
            m_forms.expect((nf[i] == nf[j]) == in_m, describe);
            n_forms.expect((cf[i] == cf[j]) == holds_in_N(u, v), describe);
            if (in_m) {
                bool ok = reps[i].extremes == reps[j].extremes;
                for (std::size_t b = 0; ok && b < reps[i].blocks.size(); ++b) {
                    ok = is_balanced(reps[i].blocks[b], reps[j].blocks[b]);
                }
                extremes.expect(ok, describe);
            }
        }
    }

    Tally sorting("sorting swaps reach the normal form");
    Rng rng = make_rng(seed, 13);
    for (int i = 0; i < 10'000; ++i) {
        Word u(static_cast<std::size_t>(uniform(rng, 1, 14)));
        for (auto& x : u) {
            x = uniform(rng, 1, 4);
        }
        std::size_t steps = 0;
        sorting.expect(sort_blocks(u, &steps) == normal_form(u));
    }

    Tally bases("swap identities hold in M, cube transport holds in N");
    for (auto which : {SwapIdentity::Nested, SwapIdentity::Interleaved}) {
        const auto id = swap_identity(which);
        bases.expect(holds_in_M(letters_of(id.lhs), letters_of(id.rhs)), [&] { return to_string(which); });
    }
    const auto cube = parse_identity("x^3yx = xyx^3");
    const Word cl = letters_of(cube.identity.lhs);
    const Word cr = letters_of(cube.identity.rhs);
    bases.expect(holds_in_N(cl, cr) && !holds_in_M(cl, cr), [] { return std::string("x^3yx = xyx^3"); });
    return outcome({&example, &extremes, &m_forms, &n_forms, &sorting, &bases},
                   std::to_string(words.size()) + " words");
}

// Words obtained by spreading `copies` letters 1 over the gaps of `base`.
void spread_letter(const Word& base, int copies, std::vector<Word>& out)
{
    std::vector<int> gaps(base.size() + 1, 0);
    auto emit = [&] {
        Word w;
        for (std::size_t g = 0; g < gaps.size(); ++g) {
            w.insert(w.end(), static_cast<std::size_t>(gaps[g]), 1);
            if (g < base.size()) {
                w.push_back(base[g]);
            }
        }
        out.push_back(std::move(w));
    };
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int left) {
        if (g + 1 == gaps.size()) {
            gaps[g] = left;
            emit();
            return;
        }
        for (int c = 0; c <= left; ++c) {
            gaps[g] = c;
            rec(g + 1, left - c);
        }
    };
    rec(0, copies);
}

bool has_square_of_first(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == 1 && w[i + 1] == 1) {
            return true;
        }
    }
    return false;
}

// 14. Values of Zimin words in the twisted product.
CheckOutcome twisted_zimin(std::uint64_t seed)
{
    const TwistedMonoid tw;
    std::vector<TwistedElement> values;
    for (int i = 1; i <= 5; ++i) {
        values.push_back({CircleForest::generator(i), {}, 1});
    }
    Tally closed("closed form of Z_k");
    for (int k = 1; k <= 5; ++k) {
        const auto got = evaluate(plain(zimin(k)), std::span<const TwistedElement>(values), tw);
        CircleForest second;
        for (int i = 2; i <= k; ++i) {
            second += CircleForest::generator(i).times(std::uint64_t{1} << (k - i));
        }
        const TwistedElement want{CircleForest::generator(1).times(std::uint64_t{1} << (k - 1)), second,
                                  (std::int64_t{1} << k) - 1};
        closed.expect(got == want, [&] { return "k = " + std::to_string(k) + ": " + to_string(got); });
    }

    // Balanced rearrangements of Z_k that move copies of x1 next to each other.
    Tally separated("words with a square of x1 separate from Z_k");
    Rng rng = make_rng(seed, 14);
    for (int k = 2; k <= 5; ++k) {
        const Word z = zimin(k);
        Word rest;
        for (Letter x : z) {
            if (x != 1) {
                rest.push_back(x);
            }
        }
        std::vector<Word> family;
        const int copies = 1 << (k - 1);
        if (k <= 4) {
            spread_letter(rest, copies, family);
        } else {
            for (int i = 0; i < 1000; ++i) {
                std::vector<int> gaps(rest.size() + 1, 0);
                for (int c = 0; c < copies; ++c) {
                    ++gaps[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rest.size())))];
                }
                Word w;
                for (std::size_t g = 0; g < gaps.size(); ++g) {
                    w.insert(w.end(), static_cast<std::size_t>(gaps[g]), 1);
                    if (g < rest.size()) {
                        w.push_back(rest[g]);
                    }
                }
                family.push_back(std::move(w));
            }
        }
        const auto zv = evaluate(plain(z), std::span<const TwistedElement>(values), tw);
        for (const auto& w : family) {
            if (!has_square_of_first(w)) {
                continue;
            }
            const auto wv = evaluate(plain(w), std::span<const TwistedElement>(values), tw);
            separated.expect(wv != zv && wv.second.contains_summand(CircleForest::generator(1)) &&
                                 wv.shift == zv.shift,
                             [&] { return format_word(w, Alphabet::indexed(5)); });
        }
    }
    return outcome({&closed, &separated});
}

// 15. Powers and mixed words in the rank-0 triple semigroup.
CheckOutcome rees_computations(std::uint64_t)
{
    const ReesSemigroup rs;
    const CircleForest circle = CircleForest::enclose({});
    Tally powers("(0,0,0)^t = (0,(t-1)(0),0)");
    ReesTriple p{};
    for (int t = 1; t <= 8; ++t) {
        if (t > 1) {
            p = rs.mul(p, ReesTriple{});
        }
        powers.expect(p == ReesTriple{{}, circle.times(static_cast<std::uint64_t>(t - 1)), {}},
                      [&] { return "t = " + std::to_string(t) + ": " + to_string(p); });
    }

    Tally plain_powers("(0,0,(0))^t = (0,(t-1)((0)),(0))");
    const ReesTriple y{{}, {}, circle};
    const CircleForest nested = CircleForest::enclose(circle);
    for (int t = 1; t <= 8; ++t) {
        const auto v = evaluate(plain(Word(static_cast<std::size_t>(t), 1)), std::span<const ReesTriple>(&y, 1), rs);
        plain_powers.expect(v == ReesTriple{{}, nested.times(static_cast<std::uint64_t>(t - 1)), circle},
                            [&] { return to_string(v); });
    }

    Tally mixed("((0)+(0)) summand iff a starred x lies between the outer x's");
    const CircleForest marker = CircleForest::enclose(circle + circle);
    for (int len = 1; len <= 8; ++len) {
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            if ((mask & 1u) != 0 || (mask >> (len - 1) & 1u) != 0) {
                continue; // first and last symbols are unstarred
            }
            IWord w;
            for (int i = 0; i < len; ++i) {
                w.push_back({1, ((mask >> i) & 1u) != 0});
            }
            const auto v = evaluate(w, std::span<const ReesTriple>(&y, 1), rs);
            mixed.expect(v.b.contains_summand(marker) == (mask != 0),
                         [&] { return format_word(w, Alphabet::indexed(1)); });
        }
    }
    return outcome({&powers, &plain_powers, &mixed});
}

template <class T, class Mul, class Sig>
void anti_automorphism(Tally& t, const T& x, const T& y, Mul mul, Sig inv)
{
    t.expect(inv(inv(x)) == x && inv(mul(x, y)) == mul(inv(y), inv(x)));
}

CircleForest random_forest(Rng& rng)
{
    CircleForest c;
    const int parts = uniform(rng, 0, 2);
    for (int i = 0; i < parts; ++i) {
        c += CircleForest::generator(uniform(rng, 1, 3));
    }
    return c;
}

// 16. Reflection and rotation across every family, and the quotient maps.
CheckOutcome involutions(std::uint64_t seed)
{
    Rng rng = make_rng(seed, 16);
    Tally partitions("partitions");
    Tally deformed("deformed partitions");
    Tally labeled("labeled partitions");
    Tally cobordisms("cobordisms");
    Tally affine("affine diagrams");
    Tally pairs("affine pairs and triples");
    Tally annular("annular monoid on 3 points");
    Tally small("six-element monoid, twisted product, rank-0 triples");
    Tally quotients("quotient maps respect both involutions");

    auto sig = [](const auto& v) { return sigma(v); };
    auto rot = [](const auto& v) { return rho(v); };
    auto mul = [](const auto& a, const auto& b) { return compose(a, b); };
    for (int i = 0; i < 10'000; ++i) {
        const int l = uniform(rng, 0, 3), m = uniform(rng, 0, 3), n = uniform(rng, 0, 3);
        const auto a = random_partition(l, m, rng);
        const auto b = random_partition(m, n, rng);
        anti_automorphism(partitions, a, b, mul, sig);
        anti_automorphism(partitions, a, b, mul, rot);

        const bool regular = (i % 2) == 0;
        const auto da = make_deformed(a, uniform(rng, 0, 3), regular);
        const auto db = make_deformed(b, uniform(rng, 0, 3), regular);
        anti_automorphism(deformed, da, db, mul, sig);
        anti_automorphism(deformed, da, db, mul, rot);

        const auto ca = random_cobordism(rng, a, regular);
        const auto cb = random_cobordism(rng, b, regular);
        anti_automorphism(cobordisms, ca, cb, mul, sig);
        anti_automorphism(cobordisms, ca, cb, mul, rot);
        const auto la = project_to_labeled(ca);
        const auto lb = project_to_labeled(cb);
        anti_automorphism(labeled, la, lb, mul, sig);
        anti_automorphism(labeled, la, lb, mul, rot);

        quotients.expect(project_to_deformed(sigma(ca)) == sigma(project_to_deformed(ca)) &&
                             project_to_deformed(rho(ca)) == rho(project_to_deformed(ca)) &&
                             project_to_labeled(sigma(ca)) == sigma(la) && project_to_labeled(rho(ca)) == rho(la) &&
                             sigma(ca).base == reflect(a) && rho(ca).base == rotate(a) &&
                             sigma(da).base == reflect(a) && rho(da).base == rotate(a),
                         [&] { return to_string(ca); });
    }

    const ShapedPool pool(3, 2);
    for (int i = 0; i < 10'000; ++i) {
        const auto& a = pool.any(rng);
        const auto& b = pool.from(rng, a.n());
        anti_automorphism(affine, a, b, mul, sig);
        anti_automorphism(affine, a, b, mul, rot);
        const auto pa = random_pair(rng, a), pb = random_pair(rng, b);
        anti_automorphism(pairs, pa, pb, mul, sig);
        anti_automorphism(pairs, pa, pb, mul, rot);
        const auto ta = random_triple(rng, a), tb = random_triple(rng, b);
        anti_automorphism(pairs, ta, tb, mul, sig);
        anti_automorphism(pairs, ta, tb, mul, rot);
        quotients.expect(project_to_ann(sigma(a)) == reflect(project_to_ann(a)) &&
                             project_to_ann(rho(a)) == rotate(project_to_ann(a)) && sigma(pa).skeleton == sigma(a) &&
                             rho(pa).skeleton == rho(a) && sigma(ta).skeleton == sigma(a) &&
                             sigma(ta).k == sigma(make_affine_pair(a, ta.k, false)).k &&
                             rho(ta).k == rho(make_affine_pair(a, ta.k, false)).k,
                         [&] { return to_string(a); });
    }

    const auto ann = build_ann_monoid(3);
    const auto& am = ann.monoid;
    for (FiniteMonoid::Element x = 0; x < am.size(); ++x) {
        for (FiniteMonoid::Element y = 0; y < am.size(); ++y) {
            anti_automorphism(annular, x, y, [&](auto p, auto q) { return am.mul(p, q); },
                              [&](auto p) { return am.star(p); });
            anti_automorphism(annular, x, y, [&](auto p, auto q) { return am.mul(p, q); },
                              [&](auto p) { return ann.rotation[p]; });
        }
        quotients.expect(ann.elements[am.star(x)] == reflect(ann.elements[x]) &&
                         ann.elements[ann.rotation[x]] == rotate(ann.elements[x]));
    }

    for (int x = 0; x < 6; ++x) {
        for (int y = 0; y < 6; ++y) {
            anti_automorphism(small, static_cast<A21>(x), static_cast<A21>(y), a21_mul, a21_star);
        }
    }
    const TwistedMonoid tw;
    const ReesSemigroup rs;
    for (int i = 0; i < 10'000; ++i) {
        const TwistedElement x{random_forest(rng), random_forest(rng), uniform(rng, -3, 3)};
        const TwistedElement y{random_forest(rng), random_forest(rng), uniform(rng, -3, 3)};
        anti_automorphism(small, x, y, [&](const auto& p, const auto& q) { return tw.mul(p, q); },
                          [&](const auto& p) { return tw.star(p); });
        const ReesTriple u{random_forest(rng), random_forest(rng), random_forest(rng)};
        const ReesTriple v{random_forest(rng), random_forest(rng), random_forest(rng)};
        anti_automorphism(small, u, v, [&](const auto& p, const auto& q) { return rs.mul(p, q); },
                          [&](const auto& p) { return rs.star(p); });
    }
    return outcome({&partitions, &deformed, &labeled, &cobordisms, &affine, &pairs, &annular, &small, &quotients});
}

} // namespace

const std::vector<SuiteCheck>& suite_checks()
{
    static const std::vector<SuiteCheck> checks{
        {"c01", "partition composition is associative with additive dead-block counts", partition_axioms},
        {"c02", "reflection is a regular involution on partitions", partition_star},
        {"c03", "genus-labeled composition is associative", cobordism_associativity},
        {"c04", "regular stars on deformed partitions and cobordisms", regular_stars},
        {"c05", "reversal law for labeled and deformed regular stars", reversal_laws},
        {"c06", "structural idempotency test", idempotent_structure},
        {"c07", "closed-form products over irreducible idempotents", fiber_products},
        {"c08", "spectrum triples map onto the five-element semigroup", spectrum_morphism},
        {"c09", "affine diagram validation and lambda shifts", affine_laws},
        {"c10", "circle counting in affine composition", circle_counts},
        {"c11", "annular monoid on three points", ann3_structure},
        {"c12", "mirror-image idempotents with product of infinite order", mirror_idempotents},
        {"c13", "extreme representations and identity criteria", word_engine},
        {"c14", "Zimin word values in the twisted product", twisted_zimin},
        {"c15", "rank-0 triple semigroup computations", rees_computations},
        {"c16", "reflection and rotation on every family", involutions},
    };
    return checks;
}

} // namespace diagmon

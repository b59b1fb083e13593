#include "affine_oracle.hpp"
#include "oracles.hpp"

#include "diagmon/affine.hpp"
#include "diagmon/error.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace diagmon;

namespace {

APoint in(int t, int k) { return {t, Side::In, k}; }
APoint out(int t, int k) { return {t, Side::Out, k}; }

AffineDiagram cap_cup()
{
    return AffineDiagram::from_strings(2, 2, {{in(0, 1), in(0, 2)}, {out(0, 1), out(0, 2)}});
}

// Cap on top, bottom string wrapping into the next period.
AffineDiagram wrap_element()
{
    return AffineDiagram::from_strings(2, 2, {{in(0, 1), in(0, 2)}, {out(0, 2), out(1, 1)}});
}

int code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return static_cast<int>(e.code());
    }
    return -1;
}

const std::vector<AffineDiagram>& pool(int m, int n, int bound)
{
    static std::map<std::tuple<int, int, int>, std::vector<AffineDiagram>> cache;
    auto& v = cache[{m, n, bound}];
    if (v.empty()) v = enumerate_affine(m, n, bound);
    return v;
}

const AffineDiagram& pick(std::mt19937& rng, int m, int n, int bound)
{
    const auto& v = pool(m, n, bound);
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

} // namespace

TEST_CASE("standard diagrams validate")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(affine_identity(n).rank() == n);
        CHECK(zeta(n).rank() == n);
        CHECK(lambda_power(n, 3).rank() == n);
        if (n >= 2) {
            for (int i = 1; i <= n; ++i) CHECK(cup_cap(n, i).rank() == n - 2);
        }
    }
    const auto z2 = zeta(2);
    CHECK(z2.partner(in(0, 1)) == out(0, 2));
    CHECK(z2.partner(in(4, 2)) == out(5, 1));
}

TEST_CASE("invalid partner tables are rejected")
{
    // Two through strings that swap order cross.
    CHECK(code_of([] {
              AffineDiagram::from_strings(2, 2, {{in(0, 1), out(0, 2)}, {in(0, 2), out(-1, 1)}});
          }) == static_cast<int>(ErrorCode::Crossing));
    CHECK(code_of([] {
              AffineDiagram::from_strings(2, 2, {{in(0, 1), out(0, 2)}, {in(0, 2), out(1, 1)}});
          }) == -1);
    CHECK(code_of([] {
              AffineDiagram::from_strings(2, 2, {{in(0, 1), out(0, 1)}, {in(0, 2), out(1, 2)}});
          }) == static_cast<int>(ErrorCode::Crossing));
    CHECK(code_of([] { AffineDiagram::from_strings(1, 2, {{in(0, 1), out(0, 1)}}); }) ==
          static_cast<int>(ErrorCode::Parity));
    CHECK(code_of([] { AffineDiagram::from_strings(2, 2, {{in(0, 1), out(0, 1)}}); }) ==
          static_cast<int>(ErrorCode::UnmatchedPoint));
    CHECK(code_of([] { AffineDiagram::from_strings(1, 1, {{in(0, 1), out(0, 3)}}); }) ==
          static_cast<int>(ErrorCode::Range));
    CHECK(code_of([] {
              AffineDiagram::from_strings(2, 0, {{in(0, 1), in(0, 2)}, {in(0, 1), in(1, 2)}});
          }) == static_cast<int>(ErrorCode::NotInvolutive));
    // A point joined to its own translate.
    CHECK(code_of([] { AffineDiagram::from_partners(2, 0, {in(1, 1), in(0, 2)}); }) ==
          static_cast<int>(ErrorCode::NotInvolutive));
}

TEST_CASE("validation agrees with brute-force planarity")
{
    std::mt19937 rng(11);
    int accepted = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const int m = std::uniform_int_distribution<int>(0, 4)(rng);
        int n = std::uniform_int_distribution<int>(0, 4)(rng);
        if ((m + n) % 2) ++n;
        if (m + n == 0) continue;
        std::vector<int> points(static_cast<std::size_t>(m + n));
        std::iota(points.begin(), points.end(), 0);
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<APoint> partners(points.size());
        auto fp = [&](int i) { return i < m ? in(0, i + 1) : out(0, i - m + 1); };
        for (std::size_t i = 0; i < points.size(); i += 2) {
            const int t = std::uniform_int_distribution<int>(-2, 2)(rng);
            partners[static_cast<std::size_t>(points[i])] = fp(points[i + 1]).shifted(t);
            partners[static_cast<std::size_t>(points[i + 1])] = fp(points[i]).shifted(-t);
        }
        bool valid = true;
        try {
            validate_affine(m, n, partners);
        } catch (const Error&) {
            valid = false;
        }
        const bool expected = oracle::non_crossing(m, n, partners, 12);
        CHECK(valid == expected);
        accepted += valid;
    }
    CHECK(accepted > 50);
}

TEST_CASE("enumeration matches brute-force count")
{
    for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {2, 2}, {1, 3}, {3, 3}, {4, 2}}) {
        const auto all = enumerate_affine(m, n, 2);
        std::set<AffineDiagram> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (const auto& a : all) CHECK(oracle::non_crossing(a, 8));
    }
    CHECK(enumerate_affine(1, 1, 2).size() == 5);
    CHECK(enumerate_affine(3, 0, 2).empty());
}

TEST_CASE("composition matches the unfolded-graph oracle")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 600; ++trial) {
        const int l = std::uniform_int_distribution<int>(0, 4)(rng);
        const int m = l % 2 + 2 * std::uniform_int_distribution<int>(0, 1)(rng);
        const int n = l % 2 + 2 * std::uniform_int_distribution<int>(0, 1)(rng);
        if (m == 0) continue;
        const auto& a = pick(rng, l, m, 2);
        const auto& b = pick(rng, m, n, 2);
        const auto got = compose_detailed(a, b);
        const auto want = oracle::compose(a, b);
        CHECK(got.diagram.partners() == want.partners);
        CHECK(got.zero_circles == want.zero_circles);
        CHECK(got.wrapping_circles == want.wrapping_circles);
    }
}

TEST_CASE("circle counting examples")
{
    const auto e = cap_cup();
    const auto ee = compose_detailed(e, e);
    CHECK(ee.diagram == e);
    CHECK(ee.zero_circles == 1);
    CHECK(ee.wrapping_circles == 0);

    const auto a = wrap_element();
    const auto aa = compose_detailed(a, a);
    CHECK(aa.diagram.rank() == 0);
    CHECK(aa.zero_circles == 0);
    CHECK(aa.wrapping_circles == 1);

    CHECK(compose(make_affine_pair(e, 0, false), make_affine_pair(e, 0, false)) ==
          make_affine_pair(e, 0, false));
    CHECK(compose(make_affine_triple(e, 0, 0, false), make_affine_triple(e, 0, 0, false)) ==
          make_affine_triple(e, 0, 1, false));
    CHECK(compose(make_affine_pair(a, 0, false), make_affine_pair(a, 0, false)) ==
          make_affine_pair(aa.diagram, 1, false));
    const auto id = make_affine_pair(affine_identity(2), 0, false);
    CHECK(id * id == id);
}

TEST_CASE("composition shape and pair invariants")
{
    CHECK(code_of([] { compose(affine_identity(2), affine_identity(4)); }) ==
          static_cast<int>(ErrorCode::ShapeMismatch));
    CHECK(code_of([] { make_affine_pair(affine_identity(2), 1, false); }) ==
          static_cast<int>(ErrorCode::Range));
    CHECK(code_of([] { make_affine_pair(cap_cup(), -1, false); }) == static_cast<int>(ErrorCode::Range));
    CHECK(code_of([] {
              compose(make_affine_pair(cap_cup(), 0, false), make_affine_pair(cap_cup(), 0, true));
          }) == static_cast<int>(ErrorCode::RegularityMismatch));
}

TEST_CASE("generators: zeta powers and inverses")
{
    for (int n = 1; n <= 5; ++n) {
        AffineDiagram p = affine_identity(n);
        for (int i = 0; i < n; ++i) p = p * zeta(n);
        CHECK(p == lambda_power(n, 1));
        CHECK(zeta(n) * zeta_inverse(n) == affine_identity(n));
        CHECK(zeta_inverse(n) * zeta(n) == affine_identity(n));
        CHECK(lambda_power(n, 2) * lambda_power(n, -3) == lambda_power(n, -1));
        CHECK(lambda_power(n, 0) == affine_identity(n));
        CHECK(project_to_ann(lambda_power(n, 4)) == Partition::identity(n));
    }
}

TEST_CASE("associativity exhaustive on small shapes")
{
    const auto& v = pool(2, 2, 1);
    for (const auto& x : v) {
        for (const auto& y : v) {
            const auto xy = compose_detailed(x, y);
            for (const auto& z : v) {
                const auto yz = compose_detailed(y, z);
                const auto l = compose_detailed(xy.diagram, z);
                const auto r = compose_detailed(x, yz.diagram);
                REQUIRE(l.diagram == r.diagram);
                CHECK(xy.zero_circles + l.zero_circles == yz.zero_circles + r.zero_circles);
                CHECK(xy.wrapping_circles + l.wrapping_circles == yz.wrapping_circles + r.wrapping_circles);
            }
        }
    }
}

TEST_CASE("associativity of pairs and triples, random")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> kd(-2, 2);
    for (int trial = 0; trial < 500; ++trial) {
        auto mk = [&](int m, int n) {
            const auto& d = pick(rng, m, n, 2);
            return make_affine_triple(d, d.rank() == 0 ? kd(rng) : 0, kd(rng), true);
        };
        const auto x = mk(2, 0);
        const auto y = mk(0, 2);
        const auto z = mk(2, 2);
        CHECK((x * y) * z == x * (y * z));
        CHECK((y * z) * (z * z) == y * ((z * z) * z));
        const AffinePair px{x.skeleton, x.k, true};
        const AffinePair py{y.skeleton, y.k, true};
        const AffinePair pz{z.skeleton, z.k, true};
        CHECK((px * py) * pz == px * (py * pz));
        const auto yx = y * x;
        CHECK((yx.k == 0 || yx.skeleton.rank() == 0));
    }
}

TEST_CASE("lambda powers are central and shift transversals")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = std::uniform_int_distribution<int>(0, 4)(rng);
        int n = std::uniform_int_distribution<int>(0, 4)(rng);
        if ((m + n) % 2) n = n == 4 ? 3 : n + 1;
        if (m + n == 0 || m + n > 6) continue;
        const auto& a = pick(rng, m, n, m + n <= 4 ? 3 : 2);
        const int r = std::uniform_int_distribution<int>(-3, 3)(rng);
        const auto left = lambda_power(m, r) * a;
        const auto right = a * lambda_power(n, r);
        CHECK(left == right);
        for (int k = 1; k <= m; ++k) {
            for (int s = -2; s <= 2; ++s) {
                const APoint p = a.partner(in(s, k));
                const APoint q = left.partner(in(s, k));
                if (p.side == Side::In) {
                    CHECK(q == p);
                } else {
                    CHECK(q == p.shifted(r));
                }
            }
        }
        for (int k = 1; k <= n; ++k) {
            const APoint p = a.partner(out(0, k));
            if (p.side == Side::Out) CHECK(left.partner(out(0, k)) == p);
        }
        const auto base = compose_detailed(a, sigma(a));
        const auto shifted = compose_detailed(left, sigma(a));
        CHECK(base.zero_circles == shifted.zero_circles);
        CHECK(base.wrapping_circles == shifted.wrapping_circles);
    }
}

TEST_CASE("same annular image iff related by a lambda power")
{
    for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {1, 3}, {3, 1}, {3, 3}, {2, 0}, {0, 2}}) {
        const auto& v = pool(m, n, 2);
        for (const auto& a : v) {
            if (a.rank() == 0) continue;
            CHECK(shift_gap(a, a) == 0);
            for (const auto& b : v) {
                if (b.rank() == 0) continue;
                const bool same = project_to_ann(a) == project_to_ann(b);
                bool related = false;
                for (int q = -6; q <= 6 && !related; ++q) related = lambda_power(m, q) * a == b;
                CHECK(same == related);
                const auto gap = shift_gap(a, b);
                CHECK(gap.has_value() == same);
                if (gap) CHECK(apply_lambda(a, *gap) == b);
            }
            CHECK(shift_gap(a, apply_lambda(a, 2)) == 2);
        }
    }
    CHECK(code_of([] { shift_gap(cap_cup(), cap_cup()); }) == static_cast<int>(ErrorCode::RankZero));
}

TEST_CASE("projection is a homomorphism")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& a = pick(rng, 3, 3, 2);
        const auto& b = pick(rng, 3, 1, 2);
        CHECK(project_to_ann(a * b) == project_to_ann(a) * project_to_ann(b));
    }
    CHECK(project_to_ann(affine_identity(3)) == Partition::identity(3));
}

TEST_CASE("reflections: involutive anti-automorphisms")
{
    std::mt19937 rng(31);
    CHECK(sigma(affine_identity(3)) == affine_identity(3));
    CHECK(rho(affine_identity(3)) == affine_identity(3));
    for (int n = 1; n <= 4; ++n) CHECK((sigma(zeta(n)) * zeta(n)).rank() == n);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& x = pick(rng, 2, 4, 2);
        const auto& y = pick(rng, 4, 2, 2);
        CHECK(sigma(sigma(x)) == x);
        CHECK(rho(rho(x)) == x);
        CHECK(sigma(x * y) == sigma(y) * sigma(x));
        CHECK(rho(x * y) == rho(y) * rho(x));
        CHECK(x * sigma(x) * x == x);
        CHECK(project_to_ann(sigma(x)) == reflect(project_to_ann(x)));
        const auto cx = compose_detailed(x, y);
        const auto cr = compose_detailed(rho(y), rho(x));
        CHECK(cx.zero_circles == cr.zero_circles);
        CHECK(cx.wrapping_circles == cr.wrapping_circles);
    }
}

TEST_CASE("regular involution on pairs and triples")
{
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> kd(-3, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const auto& dx = pick(rng, 2, 2, 2);
        const auto x = make_affine_triple(dx, dx.rank() == 0 ? kd(rng) : 0, kd(rng), true);
        CHECK(star(star(x)) == x);
        CHECK(x * star(x) * x == x);
        CHECK(star(x) * x * star(x) == star(x));
        const AffinePair px{x.skeleton, x.k, true};
        CHECK(px * star(px) * px == px);
        CHECK(star(star(px)) == px);
        const auto sx = star(x);
        CHECK(star(px) == AffinePair{sx.skeleton, sx.k, true});
    }
    CHECK(code_of([] { star(make_affine_pair(cap_cup(), 0, false)); }) ==
          static_cast<int>(ErrorCode::NotRegular));
}

TEST_CASE("rectangular subfamily")
{
    CHECK(is_rectangular(cap_cup()));
    CHECK(is_rectangular(affine_identity(3)));
    CHECK(is_rectangular(lambda_power(3, 2)));
    for (int n = 2; n <= 4; ++n) CHECK_FALSE(is_rectangular(zeta(n)));
    CHECK_FALSE(is_rectangular(cup_cap(3, 3)));
    std::vector<AffineDiagram> rect;
    for (const auto& a : pool(3, 3, 1)) {
        if (is_rectangular(a)) rect.push_back(a);
    }
    CHECK(!rect.empty());
    for (const auto& a : rect) {
        for (const auto& b : rect) CHECK(is_rectangular(a * b));
    }
}

TEST_CASE("rank parity")
{
    for (auto [m, n] : {std::pair{2, 2}, {3, 1}, {4, 2}}) {
        for (const auto& a : pool(m, n, 1)) CHECK(a.rank() % 2 == m % 2);
    }
}

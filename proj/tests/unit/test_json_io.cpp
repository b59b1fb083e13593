#include "diagmon/error.hpp"
#include "diagmon/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace diagmon;

namespace {

int code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return static_cast<int>(e.code());
    }
    return -1;
}

int code(ErrorCode c) { return static_cast<int>(c); }

SmallVec<Genus> random_genus(const Partition& p, std::mt19937_64& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    SmallVec<Genus> g;
    for (int b = 0; b < p.block_count(); ++b) g.push_back(d(rng));
    return g;
}

void check_round_trip(Category c, const Value& v)
{
    const auto text = print_value(v);
    CAPTURE(text);
    CHECK(parse_value(c, text) == v);
}

const char* kCap = R"({"m":0,"n":2,"blocks":[[{"side":"out","index":1},{"side":"out","index":2}]],
                       "genus":{"out1":0},"spectrum":{}})";
const char* kCup = R"({"m":2,"n":0,"blocks":[[{"side":"in","index":1},{"side":"in","index":2}]],
                       "genus":{"in2":0}})";

} // namespace

TEST_CASE("category names")
{
    CHECK(parse_category("Cob0-bar") == Category::Cob0Bar);
    CHECK(parse_category("atle") == Category::ATLe);
    CHECK(category_name(Category::AnnD) == "Annd");
    CHECK(is_regular(Category::PdBar));
    CHECK_FALSE(is_regular(Category::Cob));
    CHECK(code_of([] { parse_category("Q"); }) == code(ErrorCode::UnknownCategory));
}

TEST_CASE("round trips through JSON")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = static_cast<int>(rng() % 4);
        const int n = static_cast<int>(rng() % 4);
        const auto p = random_partition(m, n, rng);
        check_round_trip(Category::P, p);
        check_round_trip(Category::Pd, make_deformed(p, static_cast<int>(rng() % 5), false));
        check_round_trip(Category::PdBar, make_deformed(p, static_cast<int>(rng() % 9) - 4, true));
        check_round_trip(Category::Cob0, make_labeled(p, random_genus(p, rng, 0, 3), false));
        check_round_trip(Category::Cob0Bar, make_labeled(p, random_genus(p, rng, -3, 3), true));
        ClosedSpectrum s;
        s.add(static_cast<Genus>(rng() % 4), static_cast<std::int64_t>(rng() % 3));
        s.add(static_cast<Genus>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 5) - 2);
        check_round_trip(Category::CobBar, make_cobordism(p, random_genus(p, rng, -2, 2), s, true));
    }
    for (int n = 0; n <= 3; ++n) {
        for (const auto& a : enumerate_affine(n, n, 1)) {
            check_round_trip(Category::ATLe, a);
            check_round_trip(Category::ATL, make_affine_pair(a, a.rank() == 0 ? 2 : 0, false));
            check_round_trip(Category::ATLd, make_affine_triple(a, 0, 3, false));
            check_round_trip(Category::Ann, project_to_ann(a));
            check_round_trip(Category::AnnD, make_deformed(project_to_ann(a), 1, false));
        }
    }
    for (const auto& a : enumerate_affine(1, 3, 1)) check_round_trip(Category::ATLe, a);
}

TEST_CASE("printed forms")
{
    const auto cap = parse_value(Category::Cob, kCap);
    CHECK(print_value(cap) ==
          R"({"blocks":[[{"index":1,"side":"out"},{"index":2,"side":"out"}]],"genus":{"out1":0},"m":0,"n":2,"spectrum":{}})");
    const auto id = print_value(affine_identity(1));
    CHECK(id == R"({"m":1,"n":1,"partners":[{"from":{"index":1,"side":"in"},"to":{"index":1,"offset":0,"side":"out"}},)"
                R"({"from":{"index":1,"side":"out"},"to":{"index":1,"offset":0,"side":"in"}}]})");
}

TEST_CASE("composition by category")
{
    const auto cap = parse_value(Category::Cob, kCap);
    const auto cup = parse_value(Category::Cob, kCup);
    const auto r = compose_values(Category::Cob, cap, cup);
    CHECK(to_json(r.product)["spectrum"].dump() == R"({"1":1})");
    CHECK(r.diagnostics["dead_blocks"] == 1);
    const auto back = compose_values(Category::Cob, cup, cap);
    CHECK(std::get<Cobordism>(back.product).base.block_count() == 2);

    const Value e = cup_cap(2, 1);
    const auto ee = compose_values(Category::ATLe, e, e);
    CHECK(ee.diagnostics["b0"] == 1);
    CHECK(ee.diagnostics["bomega"] == 0);
    CHECK(ee.product == e);

    const Value ed = make_affine_triple(cup_cap(2, 1), 0, 0, false);
    CHECK(std::get<AffineTriple>(compose_values(Category::ATLd, ed, ed).product).k0 == 1);

    const Value ann = project_to_ann(cup_cap(2, 1));
    const Value annd = make_deformed(std::get<Partition>(ann), 0, false);
    CHECK(std::get<DeformedPartition>(compose_values(Category::AnnD, annd, annd).product).s == 1);

    CHECK(code_of([&] { compose_values(Category::Cob, cap, cap); }) == code(ErrorCode::ShapeMismatch));
    CHECK(code_of([&] { compose_values(Category::P, cap, cup); }) == code(ErrorCode::UnknownCategory));
}

TEST_CASE("involutions by category")
{
    const auto cap = parse_value(Category::CobBar, kCap);
    const auto s = apply_involution(Category::CobBar, Involution::Star, cap);
    CHECK(to_json(s)["spectrum"].dump() == R"({"1":-1})");
    CHECK(apply_involution(Category::CobBar, Involution::Sigma, apply_involution(Category::CobBar, Involution::Sigma, cap)) == cap);
    const auto plain = parse_value(Category::Cob, kCap);
    CHECK(code_of([&] { apply_involution(Category::Cob, Involution::Star, plain); }) == code(ErrorCode::NotRegular));
    const Value z = zeta(3);
    CHECK(apply_involution(Category::ATLe, Involution::Star, z) == Value{sigma(zeta(3))});
    CHECK(parse_involution("rho") == Involution::Rho);
    CHECK(code_of([] { parse_involution("tau"); }) == code(ErrorCode::Parse));
}

TEST_CASE("rejected inputs")
{
    CHECK(code_of([] { parse_value(Category::P, "{"); }) == code(ErrorCode::Parse));
    CHECK(code_of([] { parse_value(Category::P, R"({"m":1,"n":1})"); }) == code(ErrorCode::Parse));
    CHECK(code_of([] { parse_value(Category::P, R"({"m":1,"n":1,"blocks":[[{"side":"up","index":1}]]})"); }) ==
          code(ErrorCode::Parse));
    CHECK(code_of([] { parse_value(Category::P, R"({"m":1,"n":1,"blocks":[[{"side":"in","index":1}]]})"); }) ==
          code(ErrorCode::Coverage));
    CHECK(code_of([] {
              parse_value(Category::Pd,
                          R"({"m":1,"n":0,"blocks":[[{"side":"in","index":1}]],"s":-1})");
          }) == code(ErrorCode::Range));
    CHECK(code_of([] {
              parse_value(Category::Cob,
                          R"({"m":2,"n":0,"blocks":[[{"side":"in","index":1}],[{"side":"in","index":2}]],"genus":{"in1":0}})");
          }) == code(ErrorCode::Coverage));
    CHECK(code_of([] {
              parse_value(Category::Cob, R"({"m":2,"n":0,"blocks":[[{"side":"in","index":1},{"side":"in","index":2}]],
                                             "genus":{"in1":0,"in2":1}})");
          }) == code(ErrorCode::Parse));
    CHECK(code_of([] {
              parse_value(Category::Cob, R"({"m":1,"n":0,"blocks":[[{"side":"in","index":1}]],"genus":{"in1":0},
                                             "spectrum":{"x":1}})");
          }) == code(ErrorCode::Parse));
    // Two strings that cross.
    CHECK(code_of([] {
              parse_value(Category::ATLe, R"({"m":2,"n":2,"partners":[
                  {"from":{"side":"in","index":1},"to":{"offset":0,"side":"out","index":2}},
                  {"from":{"side":"in","index":2},"to":{"offset":0,"side":"out","index":1}}]})");
          }) == code(ErrorCode::Crossing));
    CHECK(code_of([] {
              parse_value(Category::ATLe, R"({"m":1,"n":1,"partners":[]})");
          }) == code(ErrorCode::UnmatchedPoint));
    CHECK(code_of([] {
              parse_value(Category::ATL, R"({"m":1,"n":1,"k":1,"partners":[
                  {"from":{"side":"in","index":1},"to":{"offset":0,"side":"out","index":1}}]})");
          }) == code(ErrorCode::Range));
    CHECK(code_of([] {
              parse_value(Category::Ann, R"({"m":2,"n":2,"blocks":[[{"side":"in","index":1},{"side":"out","index":1}],
                                             [{"side":"in","index":2}],[{"side":"out","index":2}]]})");
          }) == code(ErrorCode::Crossing));
}

#include "diagmon/json_io.hpp"

#include "diagmon/annular.hpp"
#include "diagmon/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace diagmon {

namespace {

constexpr std::array<std::pair<std::string_view, Category>, 12> kCategories{{
    {"P", Category::P},
    {"Pd", Category::Pd},
    {"Pd-bar", Category::PdBar},
    {"Cob", Category::Cob},
    {"Cob-bar", Category::CobBar},
    {"Cob0", Category::Cob0},
    {"Cob0-bar", Category::Cob0Bar},
    {"aTLe", Category::ATLe},
    {"aTL", Category::ATL},
    {"aTLd", Category::ATLd},
    {"Ann", Category::Ann},
    {"Annd", Category::AnnD},
}};

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

const Json& field(const Json& j, const char* key)
{
    require(j.is_object(), ErrorCode::Parse, std::string("expected an object holding \"") + key + "\"");
    const auto it = j.find(key);
    require(it != j.end(), ErrorCode::Parse, std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t integer(const Json& j, const char* what)
{
    require(j.is_number_integer(), ErrorCode::Parse, std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

int small_integer(const Json& j, const char* what)
{
    const auto v = integer(j, what);
    require(v >= -1'000'000 && v <= 1'000'000, ErrorCode::Range, std::string(what) + " is out of range");
    return static_cast<int>(v);
}

std::int64_t integer_field(const Json& j, const char* key) { return integer(field(j, key), key); }

std::int64_t optional_integer(const Json& j, const char* key)
{
    return j.contains(key) ? integer(j.at(key), key) : 0;
}

Side side_from_json(const Json& j)
{
    require(j.is_string(), ErrorCode::Parse, "side must be \"in\" or \"out\"");
    const auto s = lower(j.get<std::string>());
    if (s == "in") {
        return Side::In;
    }
    require(s == "out", ErrorCode::Parse, "side must be \"in\" or \"out\"");
    return Side::Out;
}

const char* side_name(Side s) { return s == Side::In ? "in" : "out"; }

Vertex vertex_from_json(const Json& j)
{
    return {side_from_json(field(j, "side")), small_integer(field(j, "index"), "index")};
}

std::string vertex_key(Vertex v) { return side_name(v.side) + std::to_string(v.index); }

Vertex vertex_from_key(std::string_view key)
{
    const auto s = lower(key);
    Side side = Side::In;
    std::size_t digits = 0;
    if (s.starts_with("in")) {
        digits = 2;
    } else if (s.starts_with("out")) {
        side = Side::Out;
        digits = 3;
    }
    require(digits > 0 && digits < s.size() && s.size() - digits <= 6 &&
                std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits), s.end(),
                            [](unsigned char c) { return std::isdigit(c); }),
            ErrorCode::Parse, "bad vertex key \"" + std::string(key) + "\"");
    return {side, std::stoi(s.substr(digits))};
}

Json genus_to_json(const Partition& base, const SmallVec<Genus>& genus)
{
    Json out = Json::object();
    for (int b = 0; b < base.block_count(); ++b) {
        out[vertex_key(base.least_vertex(b))] = genus[static_cast<std::size_t>(b)];
    }
    return out;
}

// Keys may name any vertex of a block; each block needs exactly one key.
SmallVec<Genus> genus_from_json(const Partition& base, const Json& j)
{
    require(j.is_object(), ErrorCode::Parse, "genus must be an object keyed by vertex");
    SmallVec<Genus> genus(static_cast<std::size_t>(base.block_count()), 0);
    std::vector<bool> seen(genus.size(), false);
    for (const auto& [key, value] : j.items()) {
        const Vertex v = vertex_from_key(key);
        require(v.index >= 1 && v.index <= (v.side == Side::In ? base.m() : base.n()), ErrorCode::Range,
                "genus key " + key + " is not a vertex of the partition");
        const auto b = static_cast<std::size_t>(base.block_of(v));
        require(!seen[b], ErrorCode::Parse, "two genus keys name the block of " + key);
        seen[b] = true;
        genus[b] = integer(value, "genus");
    }
    for (std::size_t b = 0; b < seen.size(); ++b) {
        require(seen[b], ErrorCode::Coverage,
                "no genus for the block of " + vertex_key(base.least_vertex(static_cast<int>(b))));
    }
    return genus;
}

Partition annular_from_json(const Json& j)
{
    if (j.is_object() && j.contains("partners")) {
        return project_to_ann(affine_from_json(j));
    }
    Partition p = partition_from_json(j);
    require(p.m() == p.n(), ErrorCode::Range,
            "annular partitions given by blocks must be square; use the affine form otherwise");
    if (p.n() == 0) {
        return p;
    }
    require(p.n() <= kAnnBound, ErrorCode::BoundExceeded, "annular membership is only tabulated up to n = 6");
    require(shared_ann_monoid(p.n()).contains(p), ErrorCode::Crossing, "partition is not annular");
    return p;
}

template <class T>
const T& as(const Value& v)
{
    const T* p = std::get_if<T>(&v);
    require(p != nullptr, ErrorCode::UnknownCategory, "value does not belong to the requested category");
    return *p;
}

Json partition_diagnostics(const Composite& c)
{
    return {{"dead_blocks", c.dead_count()}};
}

Json affine_diagnostics(const AffineProduct& p)
{
    return {{"b0", p.zero_circles}, {"bomega", p.wrapping_circles}};
}

} // namespace

Category parse_category(std::string_view name)
{
    for (const auto& [n, c] : kCategories) {
        if (lower(n) == lower(name)) {
            return c;
        }
    }
    fail(ErrorCode::UnknownCategory, "unknown category \"" + std::string(name) + "\"");
}

std::string_view category_name(Category c) noexcept
{
    for (const auto& [n, k] : kCategories) {
        if (k == c) {
            return n;
        }
    }
    return "?";
}

bool is_regular(Category c) noexcept
{
    return c == Category::PdBar || c == Category::CobBar || c == Category::Cob0Bar;
}

Json to_json(const Vertex& v) { return {{"side", side_name(v.side)}, {"index", v.index}}; }

Json to_json(const APoint& p) { return {{"offset", p.offset}, {"side", side_name(p.side)}, {"index", p.index}}; }

Json to_json(const Partition& p)
{
    Json blocks = Json::array();
    for (const auto& block : p.blocks()) {
        Json b = Json::array();
        for (const auto& v : block) {
            b.push_back(to_json(v));
        }
        blocks.push_back(std::move(b));
    }
    return {{"m", p.m()}, {"n", p.n()}, {"blocks", std::move(blocks)}};
}

Json to_json(const ClosedSpectrum& s)
{
    Json out = Json::object();
    for (const auto& [g, count] : s.entries()) {
        out[std::to_string(g)] = count;
    }
    return out;
}

Json to_json(const DeformedPartition& x)
{
    Json j = to_json(x.base);
    j["s"] = x.s;
    return j;
}

Json to_json(const LabeledPartition& x)
{
    Json j = to_json(x.base);
    j["genus"] = genus_to_json(x.base, x.genus);
    return j;
}

Json to_json(const Cobordism& x)
{
    Json j = to_json(x.base);
    j["genus"] = genus_to_json(x.base, x.genus);
    j["spectrum"] = to_json(x.closed);
    return j;
}

Json to_json(const AffineDiagram& a)
{
    Json partners = Json::array();
    for (int i = 0; i < a.m() + a.n(); ++i) {
        const APoint from = a.fundamental_point(i);
        partners.push_back({{"from", {{"side", side_name(from.side)}, {"index", from.index}}},
                            {"to", to_json(a.partners()[static_cast<std::size_t>(i)])}});
    }
    return {{"m", a.m()}, {"n", a.n()}, {"partners", std::move(partners)}};
}

Json to_json(const AffinePair& x)
{
    Json j = to_json(x.skeleton);
    j["k"] = x.k;
    return j;
}

Json to_json(const AffineTriple& x)
{
    Json j = to_json(x.skeleton);
    j["k"] = x.k;
    j["k0"] = x.k0;
    return j;
}

Json to_json(const Value& v)
{
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

Partition partition_from_json(const Json& j)
{
    const int m = small_integer(field(j, "m"), "m");
    const int n = small_integer(field(j, "n"), "n");
    const Json& blocks = field(j, "blocks");
    require(blocks.is_array(), ErrorCode::Parse, "blocks must be an array");
    std::vector<std::vector<Vertex>> out;
    for (const auto& block : blocks) {
        require(block.is_array(), ErrorCode::Parse, "each block must be an array of vertices");
        auto& b = out.emplace_back();
        for (const auto& v : block) {
            b.push_back(vertex_from_json(v));
        }
    }
    return Partition::from_blocks(m, n, out);
}

AffineDiagram affine_from_json(const Json& j)
{
    const int m = small_integer(field(j, "m"), "m");
    const int n = small_integer(field(j, "n"), "n");
    const Json& partners = field(j, "partners");
    require(partners.is_array(), ErrorCode::Parse, "partners must be an array");
    std::vector<std::pair<APoint, APoint>> strings;
    for (const auto& entry : partners) {
        const Json& from = field(entry, "from");
        const Json& to = field(entry, "to");
        const APoint p{from.contains("offset") ? small_integer(from.at("offset"), "offset") : 0,
                       side_from_json(field(from, "side")), small_integer(field(from, "index"), "index")};
        const APoint q{small_integer(field(to, "offset"), "offset"), side_from_json(field(to, "side")),
                       small_integer(field(to, "index"), "index")};
        strings.emplace_back(p, q);
    }
    return AffineDiagram::from_strings(m, n, strings);
}

ClosedSpectrum spectrum_from_json(const Json& j)
{
    require(j.is_object(), ErrorCode::Parse, "spectrum must be an object mapping genus to count");
    ClosedSpectrum s;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        Genus g = 0;
        try {
            g = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used > 0 && used == key.size(), ErrorCode::Parse, "spectrum key \"" + key + "\" is not an integer");
        s.add(g, integer(value, "spectrum count"));
    }
    return s;
}

Value value_from_json(Category c, const Json& j)
{
    const bool regular = is_regular(c);
    switch (c) {
    case Category::P:
        return partition_from_json(j);
    case Category::Pd:
    case Category::PdBar:
        return make_deformed(partition_from_json(j), integer_field(j, "s"), regular);
    case Category::Cob0:
    case Category::Cob0Bar: {
        Partition base = partition_from_json(j);
        auto genus = genus_from_json(base, field(j, "genus"));
        return make_labeled(std::move(base), std::move(genus), regular);
    }
    case Category::Cob:
    case Category::CobBar: {
        Partition base = partition_from_json(j);
        auto genus = genus_from_json(base, field(j, "genus"));
        auto closed = j.contains("spectrum") ? spectrum_from_json(j.at("spectrum")) : ClosedSpectrum{};
        return make_cobordism(std::move(base), std::move(genus), std::move(closed), regular);
    }
    case Category::ATLe:
        return affine_from_json(j);
    case Category::ATL:
        return make_affine_pair(affine_from_json(j), optional_integer(j, "k"), false);
    case Category::ATLd:
        return make_affine_triple(affine_from_json(j), optional_integer(j, "k"), optional_integer(j, "k0"), false);
    case Category::Ann:
        return annular_from_json(j);
    case Category::AnnD:
        return make_deformed(annular_from_json(j), j.contains("s") ? integer_field(j, "s") : optional_integer(j, "k"),
                             false);
    }
    fail(ErrorCode::UnknownCategory, "unknown category");
}

Value parse_value(Category c, std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
    return value_from_json(c, j);
}

std::string print_value(const Value& v)
{
    return to_json(v).dump();
}

bool holds_category(Category c, const Value& v) noexcept
{
    switch (c) {
    case Category::P:
    case Category::Ann:
        return std::holds_alternative<Partition>(v);
    case Category::Pd:
    case Category::PdBar:
    case Category::AnnD:
        return std::holds_alternative<DeformedPartition>(v) &&
               std::get<DeformedPartition>(v).regular == is_regular(c);
    case Category::Cob0:
    case Category::Cob0Bar:
        return std::holds_alternative<LabeledPartition>(v) &&
               std::get<LabeledPartition>(v).regular == is_regular(c);
    case Category::Cob:
    case Category::CobBar:
        return std::holds_alternative<Cobordism>(v) && std::get<Cobordism>(v).regular == is_regular(c);
    case Category::ATLe:
        return std::holds_alternative<AffineDiagram>(v);
    case Category::ATL:
        return std::holds_alternative<AffinePair>(v);
    case Category::ATLd:
        return std::holds_alternative<AffineTriple>(v);
    }
    return false;
}

ComposeResult compose_values(Category c, const Value& x, const Value& y)
{
    require(holds_category(c, x) && holds_category(c, y), ErrorCode::UnknownCategory,
            "operands do not belong to category " + std::string(category_name(c)));
    switch (c) {
    case Category::P:
    case Category::Ann: {
        const auto& a = as<Partition>(x);
        const auto& b = as<Partition>(y);
        require(a.n() == b.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        const auto comp = compose_detailed(a, b);
        return {comp.product, partition_diagnostics(comp)};
    }
    case Category::Pd:
    case Category::PdBar:
    case Category::AnnD: {
        const auto& a = as<DeformedPartition>(x);
        const auto& b = as<DeformedPartition>(y);
        require(a.base.n() == b.base.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        const auto comp = compose_detailed(a.base, b.base);
        Json d = partition_diagnostics(comp);
        Value product = compose(a, b);
        if (c == Category::AnnD) {
            d["circles"] = comp.dead_count();
        }
        return {std::move(product), std::move(d)};
    }
    case Category::Cob0:
    case Category::Cob0Bar: {
        const auto& a = as<LabeledPartition>(x);
        const auto& b = as<LabeledPartition>(y);
        require(a.base.n() == b.base.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        return {compose(a, b), partition_diagnostics(compose_detailed(a.base, b.base))};
    }
    case Category::Cob:
    case Category::CobBar: {
        const auto& a = as<Cobordism>(x);
        const auto& b = as<Cobordism>(y);
        require(a.base.n() == b.base.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        return {compose(a, b), partition_diagnostics(compose_detailed(a.base, b.base))};
    }
    case Category::ATLe: {
        const auto& a = as<AffineDiagram>(x);
        const auto& b = as<AffineDiagram>(y);
        require(a.n() == b.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        auto p = compose_detailed(a, b);
        return {p.diagram, affine_diagnostics(p)};
    }
    case Category::ATL: {
        const auto& a = as<AffinePair>(x);
        const auto& b = as<AffinePair>(y);
        require(a.skeleton.n() == b.skeleton.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        return {compose(a, b), affine_diagnostics(compose_detailed(a.skeleton, b.skeleton))};
    }
    case Category::ATLd: {
        const auto& a = as<AffineTriple>(x);
        const auto& b = as<AffineTriple>(y);
        require(a.skeleton.n() == b.skeleton.m(), ErrorCode::ShapeMismatch, "codomain and domain differ");
        return {compose(a, b), affine_diagnostics(compose_detailed(a.skeleton, b.skeleton))};
    }
    }
    fail(ErrorCode::UnknownCategory, "unknown category");
}

Involution parse_involution(std::string_view name)
{
    const auto s = lower(name);
    if (s == "star" || s == "*") {
        return Involution::Star;
    }
    if (s == "sigma") {
        return Involution::Sigma;
    }
    if (s == "rho") {
        return Involution::Rho;
    }
    fail(ErrorCode::Parse, "unknown involution \"" + std::string(name) + "\"; expected star, sigma or rho");
}

Value apply_involution(Category c, Involution which, const Value& x)
{
    require(holds_category(c, x), ErrorCode::UnknownCategory,
            "value does not belong to category " + std::string(category_name(c)));
    return std::visit(
        [&](const auto& v) -> Value {
            using T = std::decay_t<decltype(v)>;
            if (which == Involution::Rho) {
                return rho(v);
            }
            if (which == Involution::Sigma) {
                return sigma(v);
            }
            if constexpr (std::is_same_v<T, Partition> || std::is_same_v<T, AffineDiagram>) {
                return sigma(v);
            } else {
                return star(v);
            }
        },
        x);
}

} // namespace diagmon

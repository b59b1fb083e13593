#include "diagmon/affine.hpp"

#include "diagmon/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace diagmon {

std::string to_string(const APoint& p)
{
    return std::string(p.side == Side::In ? "In" : "Out") + "(" + std::to_string(p.offset) + "," +
           std::to_string(p.index) + ")";
}

namespace {

// Linear order on boundary points: bottom row read right to left, then top
// row read left to right.
std::tuple<int, int, int> order_key(const APoint& p)
{
    if (p.side == Side::In) {
        return {1, p.offset, p.index};
    }
    return {0, -p.offset, -p.index};
}

struct String {
    APoint lo;
    APoint hi;
};

String make_string(APoint x, APoint y)
{
    if (order_key(y) < order_key(x)) {
        std::swap(x, y);
    }
    return {x, y};
}

bool strictly_inside(const String& s, const APoint& p)
{
    const auto k = order_key(p);
    return order_key(s.lo) < k && k < order_key(s.hi);
}

bool strings_cross(const String& s, const String& t)
{
    return strictly_inside(s, t.lo) != strictly_inside(s, t.hi);
}

String shifted(const String& s, int t)
{
    return {s.lo.shifted(t), s.hi.shifted(t)};
}

int layer_size(int m, int n, Side side)
{
    return side == Side::In ? m : n;
}

int fundamental_of(int m, Side side, int index)
{
    return side == Side::In ? index - 1 : m + index - 1;
}

APoint fundamental_point_of(int m, int i)
{
    return i < m ? APoint{0, Side::In, i + 1} : APoint{0, Side::Out, i - m + 1};
}

// Does the family generated by s cross the family generated by t (or itself)?
bool families_cross(const String& s, const String& t, bool same, int window)
{
    for (int shift = -window; shift <= window; ++shift) {
        if (same && shift == 0) {
            continue;
        }
        if (strings_cross(s, shifted(t, shift))) {
            return true;
        }
    }
    return false;
}

int offset_bound(const std::vector<APoint>& partners)
{
    int w = 0;
    for (const auto& p : partners) {
        w = std::max(w, std::abs(p.offset));
    }
    return w;
}

} // namespace

void validate_affine(int m, int n, const std::vector<APoint>& partners)
{
    require(m >= 0 && n >= 0, ErrorCode::Range, "negative layer size");
    require((m + n) % 2 == 0, ErrorCode::Parity, "m + n must be even");
    require(partners.size() == static_cast<std::size_t>(m + n), ErrorCode::UnmatchedPoint,
            "partner table has the wrong length");
    std::vector<String> strings;
    for (int i = 0; i < m + n; ++i) {
        const APoint& q = partners[static_cast<std::size_t>(i)];
        require(q.index >= 1 && q.index <= layer_size(m, n, q.side), ErrorCode::Range,
                "partner " + to_string(q) + " out of range");
        const int j = fundamental_of(m, q.side, q.index);
        require(j != i, ErrorCode::NotInvolutive,
                "point " + to_string(fundamental_point_of(m, i)) + " matched with a copy of itself");
        const APoint& back = partners[static_cast<std::size_t>(j)];
        const APoint p = fundamental_point_of(m, i);
        require(back == APoint{-q.offset, p.side, p.index}, ErrorCode::NotInvolutive,
                "partner of " + to_string(q) + " is not " + to_string(p));
        if (i < j) {
            strings.push_back(make_string(p, q));
        }
    }
    const int window = 2 * offset_bound(partners) + 2;
    for (std::size_t a = 0; a < strings.size(); ++a) {
        for (std::size_t b = a; b < strings.size(); ++b) {
            require(!families_cross(strings[a], strings[b], a == b, window), ErrorCode::Crossing,
                    "strings " + to_string(strings[a].lo) + "-" + to_string(strings[a].hi) + " and " +
                        to_string(strings[b].lo) + "-" + to_string(strings[b].hi) + " cross");
        }
    }
}

AffineDiagram AffineDiagram::from_partners(int m, int n, std::vector<APoint> partners)
{
    validate_affine(m, n, partners);
    AffineDiagram a;
    a.m_ = m;
    a.n_ = n;
    a.partners_ = std::move(partners);
    return a;
}

AffineDiagram AffineDiagram::from_strings(int m, int n,
                                          const std::vector<std::pair<APoint, APoint>>& strings)
{
    require(m >= 0 && n >= 0, ErrorCode::Range, "negative layer size");
    require((m + n) % 2 == 0, ErrorCode::Parity, "m + n must be even");
    std::vector<APoint> partners(static_cast<std::size_t>(m + n));
    std::vector<bool> set(static_cast<std::size_t>(m + n), false);
    auto assign = [&](const APoint& from, const APoint& to) {
        require(from.index >= 1 && from.index <= layer_size(m, n, from.side), ErrorCode::Range,
                to_string(from) + " out of range");
        const auto i = static_cast<std::size_t>(fundamental_of(m, from.side, from.index));
        const APoint normalized = to.shifted(-from.offset);
        require(!set[i] || partners[i] == normalized, ErrorCode::NotInvolutive,
                to_string(from) + " has two partners");
        partners[i] = normalized;
        set[i] = true;
    };
    for (const auto& [p, q] : strings) {
        assign(p, q);
        assign(q, p);
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        require(set[i], ErrorCode::UnmatchedPoint,
                to_string(fundamental_point_of(m, static_cast<int>(i))) + " is unmatched");
    }
    return from_partners(m, n, std::move(partners));
}

int AffineDiagram::fundamental(Side side, int index) const
{
    require(index >= 1 && index <= layer_size(m_, n_, side), ErrorCode::Range, "index out of range");
    return fundamental_of(m_, side, index);
}

APoint AffineDiagram::fundamental_point(int i) const
{
    return fundamental_point_of(m_, i);
}

APoint AffineDiagram::partner(APoint p) const
{
    return partners_[static_cast<std::size_t>(fundamental(p.side, p.index))].shifted(p.offset);
}

int AffineDiagram::rank() const noexcept
{
    int r = 0;
    for (int i = 0; i < m_; ++i) {
        if (partners_[static_cast<std::size_t>(i)].side == Side::Out) {
            ++r;
        }
    }
    return r;
}

int AffineDiagram::max_offset() const noexcept
{
    return offset_bound(partners_);
}

std::size_t AffineDiagram::hash() const noexcept
{
    std::size_t h = static_cast<std::size_t>(m_) * 7919u + static_cast<std::size_t>(n_);
    for (const auto& p : partners_) {
        h = h * 131u + static_cast<std::size_t>(p.offset + 1024) * 4u +
            static_cast<std::size_t>(p.side) * 2u + static_cast<std::size_t>(p.index);
    }
    return h;
}

std::string to_string(const AffineDiagram& a)
{
    std::string out = "[" + std::to_string(a.m()) + "~>" + std::to_string(a.n()) + "]{";
    for (int i = 0; i < a.m() + a.n(); ++i) {
        const APoint q = a.partners()[static_cast<std::size_t>(i)];
        const APoint p = a.fundamental_point(i);
        if (fundamental_of(a.m(), q.side, q.index) < i) {
            continue;
        }
        out += (out.back() == '{' ? "" : ", ") + to_string(p) + "-" + to_string(q);
    }
    return out + "}";
}

AffineProduct compose_detailed(const AffineDiagram& a, const AffineDiagram& b)
{
    require(a.n() == b.m(), ErrorCode::ShapeMismatch,
            "cannot compose affine diagrams of shapes (" + std::to_string(a.m()) + "," +
                std::to_string(a.n()) + ") and (" + std::to_string(b.m()) + "," + std::to_string(b.n()) +
                ")");
    const int l = a.m();
    const int m = a.n();
    const int n = b.n();
    std::vector<char> visited(static_cast<std::size_t>(m), 0);
    const int step_limit = 2 * m + 4;
    auto mark = [&](int index) { visited[static_cast<std::size_t>(index - 1)] = 1; };

    // Follow the path from a middle point, next crossing the lower diagram
    // (into_lower) or the upper one, until it exits at the top or bottom.
    auto follow = [&](APoint mid, bool into_lower) -> APoint {
        for (int steps = 0; steps < step_limit; ++steps) {
            mark(mid.index);
            if (into_lower) {
                const APoint q = b.partner({mid.offset, Side::In, mid.index});
                if (q.side == Side::Out) {
                    return q;
                }
                mid = q;
            } else {
                const APoint r = a.partner({mid.offset, Side::Out, mid.index});
                if (r.side == Side::In) {
                    return r;
                }
                mid = r;
            }
            into_lower = !into_lower;
        }
        fail(ErrorCode::Internal, "path through the middle layer does not terminate");
    };

    std::vector<APoint> partners(static_cast<std::size_t>(l + n));
    for (int k = 1; k <= l; ++k) {
        const APoint p = a.partner({0, Side::In, k});
        partners[static_cast<std::size_t>(k - 1)] = p.side == Side::In ? p : follow(p, true);
    }
    for (int k = 1; k <= n; ++k) {
        const APoint p = b.partner({0, Side::Out, k});
        partners[static_cast<std::size_t>(l + k - 1)] = p.side == Side::Out ? p : follow(p, false);
    }

    AffineProduct out;
    for (int j = 1; j <= m; ++j) {
        if (visited[static_cast<std::size_t>(j - 1)]) {
            continue;
        }
        APoint mid{0, Side::Out, j};
        int steps = 0;
        do {
            mark(mid.index);
            const APoint r = a.partner({mid.offset, Side::Out, mid.index});
            const APoint q = b.partner({r.offset, Side::In, r.index});
            require(r.side == Side::Out && q.side == Side::In, ErrorCode::Internal,
                    "closed loop escaped the middle layer");
            mark(r.index);
            mid = {q.offset, Side::Out, q.index};
            require(++steps <= step_limit, ErrorCode::Internal, "closed loop does not close");
        } while (mid.index != j);
        require(std::abs(mid.offset) <= 1, ErrorCode::WindingBound,
                "closed loop winds " + std::to_string(mid.offset) + " times");
        if (mid.offset == 0) {
            ++out.zero_circles;
        } else {
            ++out.wrapping_circles;
        }
    }
    out.diagram = AffineDiagram::from_partners(l, n, std::move(partners));
    return out;
}

AffineDiagram compose(const AffineDiagram& a, const AffineDiagram& b)
{
    return compose_detailed(a, b).diagram;
}

AffineDiagram affine_identity(int n)
{
    return lambda_power(n, 0);
}

AffineDiagram zeta(int n)
{
    require(n >= 1, ErrorCode::Range, "rotation needs n >= 1");
    std::vector<std::pair<APoint, APoint>> s;
    for (int k = 1; k < n; ++k) {
        s.push_back({{0, Side::In, k}, {0, Side::Out, k + 1}});
    }
    s.push_back({{0, Side::In, n}, {1, Side::Out, 1}});
    return AffineDiagram::from_strings(n, n, s);
}

AffineDiagram zeta_inverse(int n)
{
    return sigma(zeta(n));
}

AffineDiagram lambda_power(int n, int r)
{
    require(n >= 0, ErrorCode::Range, "negative size");
    std::vector<std::pair<APoint, APoint>> s;
    for (int k = 1; k <= n; ++k) {
        s.push_back({{0, Side::In, k}, {r, Side::Out, k}});
    }
    return AffineDiagram::from_strings(n, n, s);
}

AffineDiagram cup_cap(int n, int i)
{
    require(n >= 2 && i >= 1 && i <= n, ErrorCode::Range, "cup/cap position out of range");
    std::vector<std::pair<APoint, APoint>> s;
    if (i < n) {
        s.push_back({{0, Side::In, i}, {0, Side::In, i + 1}});
        s.push_back({{0, Side::Out, i}, {0, Side::Out, i + 1}});
        for (int k = 1; k <= n; ++k) {
            if (k != i && k != i + 1) {
                s.push_back({{0, Side::In, k}, {0, Side::Out, k}});
            }
        }
    } else {
        s.push_back({{0, Side::In, n}, {1, Side::In, 1}});
        s.push_back({{0, Side::Out, n}, {1, Side::Out, 1}});
        for (int k = 2; k < n; ++k) {
            s.push_back({{0, Side::In, k}, {0, Side::Out, k}});
        }
    }
    return AffineDiagram::from_strings(n, n, s);
}

Partition project_to_ann(const AffineDiagram& a)
{
    std::vector<int> labels(static_cast<std::size_t>(a.m() + a.n()));
    for (int i = 0; i < a.m() + a.n(); ++i) {
        const APoint q = a.partners()[static_cast<std::size_t>(i)];
        labels[static_cast<std::size_t>(i)] = std::min(i, fundamental_of(a.m(), q.side, q.index));
    }
    return Partition::from_labels(a.m(), a.n(), labels);
}

AffineDiagram apply_lambda(const AffineDiagram& a, int q)
{
    return compose(lambda_power(a.m(), q), a);
}

std::optional<int> shift_gap(const AffineDiagram& a, const AffineDiagram& b)
{
    require(a.m() == b.m() && a.n() == b.n(), ErrorCode::ShapeMismatch, "shapes differ");
    require(a.rank() > 0 && b.rank() > 0, ErrorCode::RankZero, "shift gap needs positive rank");
    if (project_to_ann(a) != project_to_ann(b)) {
        return std::nullopt;
    }
    for (int k = 1; k <= a.m(); ++k) {
        const APoint pa = a.partner({0, Side::In, k});
        if (pa.side == Side::Out) {
            const int q = b.partner({0, Side::In, k}).offset - pa.offset;
            if (apply_lambda(a, q) == b) {
                return q;
            }
            return std::nullopt;
        }
    }
    fail(ErrorCode::Internal, "positive rank without a transversal string");
}

namespace {

template <class Map>
AffineDiagram remap(const AffineDiagram& a, int new_m, int new_n, Map map)
{
    std::vector<APoint> partners(static_cast<std::size_t>(new_m + new_n));
    for (int i = 0; i < a.m() + a.n(); ++i) {
        const APoint p = map(a.fundamental_point(i));
        partners[static_cast<std::size_t>(fundamental_of(new_m, p.side, p.index))] =
            map(a.partners()[static_cast<std::size_t>(i)]);
    }
    return AffineDiagram::from_partners(new_m, new_n, std::move(partners));
}

Side other(Side s)
{
    return s == Side::In ? Side::Out : Side::In;
}

} // namespace

AffineDiagram sigma(const AffineDiagram& a)
{
    return remap(a, a.n(), a.m(), [](const APoint& p) { return APoint{p.offset, other(p.side), p.index}; });
}

AffineDiagram rho(const AffineDiagram& a)
{
    const int m = a.m();
    const int n = a.n();
    return remap(a, n, m, [m, n](const APoint& p) {
        return p.side == Side::In ? APoint{-p.offset, Side::Out, m + 1 - p.index}
                                  : APoint{-p.offset, Side::In, n + 1 - p.index};
    });
}

bool is_rectangular(const AffineDiagram& a)
{
    std::optional<int> through;
    for (int i = 0; i < a.m() + a.n(); ++i) {
        const APoint p = a.fundamental_point(i);
        const APoint q = a.partners()[static_cast<std::size_t>(i)];
        if (p.side == q.side) {
            if (q.offset != 0) {
                return false;
            }
        } else if (p.side == Side::In) {
            if (through && *through != q.offset) {
                return false;
            }
            through = q.offset;
        }
    }
    return true;
}

std::vector<AffineDiagram> enumerate_affine(int m, int n, int bound)
{
    require(m >= 0 && n >= 0 && bound >= 0, ErrorCode::Range, "negative argument");
    require(m + n <= 12, ErrorCode::BoundExceeded, "affine enumeration limited to 12 points");
    std::vector<AffineDiagram> out;
    if ((m + n) % 2 != 0) {
        return out;
    }
    const int total = m + n;
    const int window = 2 * bound + 2;
    std::vector<APoint> partners(static_cast<std::size_t>(total));
    std::vector<bool> used(static_cast<std::size_t>(total), false);
    std::vector<String> strings;

    auto recurse = [&](auto& self) -> void {
        int i = 0;
        while (i < total && used[static_cast<std::size_t>(i)]) {
            ++i;
        }
        if (i == total) {
            out.push_back(AffineDiagram::from_partners(m, n, partners));
            return;
        }
        const APoint p = fundamental_point_of(m, i);
        used[static_cast<std::size_t>(i)] = true;
        for (int j = i + 1; j < total; ++j) {
            if (used[static_cast<std::size_t>(j)]) {
                continue;
            }
            const APoint base = fundamental_point_of(m, j);
            for (int t = -bound; t <= bound; ++t) {
                const String s = make_string(p, base.shifted(t));
                bool ok = !families_cross(s, s, true, window);
                for (std::size_t k = 0; ok && k < strings.size(); ++k) {
                    ok = !families_cross(strings[k], s, false, window);
                }
                if (!ok) {
                    continue;
                }
                partners[static_cast<std::size_t>(i)] = base.shifted(t);
                partners[static_cast<std::size_t>(j)] = p.shifted(-t);
                used[static_cast<std::size_t>(j)] = true;
                strings.push_back(s);
                self(self);
                strings.pop_back();
                used[static_cast<std::size_t>(j)] = false;
            }
        }
        used[static_cast<std::size_t>(i)] = false;
    };
    recurse(recurse);
    return out;
}

AffinePair make_affine_pair(AffineDiagram skeleton, std::int64_t k, bool regular)
{
    require(regular || k >= 0, ErrorCode::Range, "circle count must be non-negative");
    require(k == 0 || skeleton.rank() == 0, ErrorCode::Range,
            "wrapping circles only occur with rank-zero skeletons");
    return {std::move(skeleton), k, regular};
}

AffineTriple make_affine_triple(AffineDiagram skeleton, std::int64_t k, std::int64_t k0, bool regular)
{
    require(regular || k0 >= 0, ErrorCode::Range, "circle count must be non-negative");
    auto pair = make_affine_pair(std::move(skeleton), k, regular);
    return {std::move(pair.skeleton), k, k0, regular};
}

namespace {

void check_flags(bool a, bool b)
{
    require(a == b, ErrorCode::RegularityMismatch, "cannot mix regular and non-regular operands");
}

} // namespace

AffinePair compose(const AffinePair& x, const AffinePair& y)
{
    check_flags(x.regular, y.regular);
    auto p = compose_detailed(x.skeleton, y.skeleton);
    AffinePair out{std::move(p.diagram), x.k + y.k + p.wrapping_circles, x.regular};
    require(out.k == 0 || out.skeleton.rank() == 0, ErrorCode::Internal,
            "wrapping circles alongside through strings");
    return out;
}

AffineTriple compose(const AffineTriple& x, const AffineTriple& y)
{
    check_flags(x.regular, y.regular);
    auto p = compose_detailed(x.skeleton, y.skeleton);
    AffineTriple out{std::move(p.diagram), x.k + y.k + p.wrapping_circles,
                     x.k0 + y.k0 + p.zero_circles, x.regular};
    require(out.k == 0 || out.skeleton.rank() == 0, ErrorCode::Internal,
            "wrapping circles alongside through strings");
    return out;
}

AffinePair sigma(const AffinePair& x) { return {sigma(x.skeleton), x.k, x.regular}; }
AffinePair rho(const AffinePair& x) { return {rho(x.skeleton), x.k, x.regular}; }
AffineTriple sigma(const AffineTriple& x) { return {sigma(x.skeleton), x.k, x.k0, x.regular}; }
AffineTriple rho(const AffineTriple& x) { return {rho(x.skeleton), x.k, x.k0, x.regular}; }

AffinePair star(const AffinePair& x)
{
    require(x.regular, ErrorCode::NotRegular, "the involution exists only in the regular category");
    const AffineDiagram r = sigma(x.skeleton);
    const auto left = compose_detailed(x.skeleton, r);
    const auto right = compose_detailed(r, x.skeleton);
    return {r, -x.k - left.wrapping_circles - right.wrapping_circles, true};
}

AffineTriple star(const AffineTriple& x)
{
    require(x.regular, ErrorCode::NotRegular, "the involution exists only in the regular category");
    const AffineDiagram r = sigma(x.skeleton);
    const auto left = compose_detailed(x.skeleton, r);
    const auto right = compose_detailed(r, x.skeleton);
    return {r, -x.k - left.wrapping_circles - right.wrapping_circles,
            -x.k0 - left.zero_circles - right.zero_circles, true};
}

} // namespace diagmon

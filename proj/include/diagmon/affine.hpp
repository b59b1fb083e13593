// Shift-invariant non-crossing perfect matchings on Z x [m] (top) and Z x [n] (bottom).
#pragma once

#include "diagmon/partition.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagmon {

struct APoint {
    int offset = 0;
    Side side = Side::In;
    int index = 1;

    friend auto operator<=>(const APoint&, const APoint&) = default;

    APoint shifted(int t) const noexcept { return {offset + t, side, index}; }
};

std::string to_string(const APoint& p);

// Only the partners of the points at offset 0 are stored; the rest follow by
// shift invariance. Fundamental point order: In_1..In_m, Out_1..Out_n.
class AffineDiagram {
public:
    AffineDiagram() = default;

    static AffineDiagram from_partners(int m, int n, std::vector<APoint> partners);
    static AffineDiagram from_strings(int m, int n, const std::vector<std::pair<APoint, APoint>>& strings);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int fundamental(Side side, int index) const;
    APoint fundamental_point(int i) const;
    APoint partner(APoint p) const;
    const std::vector<APoint>& partners() const noexcept { return partners_; }

    int rank() const noexcept;
    int max_offset() const noexcept;

    std::size_t hash() const noexcept;
    friend bool operator==(const AffineDiagram&, const AffineDiagram&) = default;
    friend auto operator<=>(const AffineDiagram&, const AffineDiagram&) = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<APoint> partners_;
};

std::string to_string(const AffineDiagram& a);

// Checks parity, involution and planarity of a partner table.
void validate_affine(int m, int n, const std::vector<APoint>& partners);

struct AffineProduct {
    AffineDiagram diagram;
    int zero_circles = 0;     // contractible closed loops per period
    int wrapping_circles = 0; // loops winding once around the annulus
};

AffineProduct compose_detailed(const AffineDiagram& a, const AffineDiagram& b);
AffineDiagram compose(const AffineDiagram& a, const AffineDiagram& b);
inline AffineDiagram operator*(const AffineDiagram& a, const AffineDiagram& b) { return compose(a, b); }

AffineDiagram affine_identity(int n);
AffineDiagram zeta(int n);
AffineDiagram zeta_inverse(int n);
AffineDiagram lambda_power(int n, int r);
// Cap/cup pair joining positions i and i+1 (i = n joins n with 1 of the next period).
AffineDiagram cup_cap(int n, int i);

// Forget offsets: the annular partition underlying a diagram.
Partition project_to_ann(const AffineDiagram& a);

// q with lambda^q a = b, when a and b share an annular image (rank > 0 only).
std::optional<int> shift_gap(const AffineDiagram& a, const AffineDiagram& b);

AffineDiagram apply_lambda(const AffineDiagram& a, int q);
AffineDiagram sigma(const AffineDiagram& a);
AffineDiagram rho(const AffineDiagram& a);

// True when some lambda-shift of a has every partner at offset 0.
bool is_rectangular(const AffineDiagram& a);

// All valid diagrams of shape (m, n) whose partner offsets lie in [-bound, bound].
std::vector<AffineDiagram> enumerate_affine(int m, int n, int bound);

// Skeleton plus count of wrapping circles.
struct AffinePair {
    AffineDiagram skeleton;
    std::int64_t k = 0;
    bool regular = false;

    friend bool operator==(const AffinePair&, const AffinePair&) = default;
};

// Skeleton plus counts of wrapping and contractible circles.
struct AffineTriple {
    AffineDiagram skeleton;
    std::int64_t k = 0;
    std::int64_t k0 = 0;
    bool regular = false;

    friend bool operator==(const AffineTriple&, const AffineTriple&) = default;
};

AffinePair make_affine_pair(AffineDiagram skeleton, std::int64_t k, bool regular);
AffineTriple make_affine_triple(AffineDiagram skeleton, std::int64_t k, std::int64_t k0, bool regular);

AffinePair compose(const AffinePair& x, const AffinePair& y);
AffineTriple compose(const AffineTriple& x, const AffineTriple& y);
inline AffinePair operator*(const AffinePair& x, const AffinePair& y) { return compose(x, y); }
inline AffineTriple operator*(const AffineTriple& x, const AffineTriple& y) { return compose(x, y); }

AffinePair sigma(const AffinePair& x);
AffinePair rho(const AffinePair& x);
AffineTriple sigma(const AffineTriple& x);
AffineTriple rho(const AffineTriple& x);
AffinePair star(const AffinePair& x);
AffineTriple star(const AffineTriple& x);

} // namespace diagmon

template <>
struct std::hash<diagmon::AffineDiagram> {
    std::size_t operator()(const diagmon::AffineDiagram& a) const noexcept { return a.hash(); }
};

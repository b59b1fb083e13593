// JSON encodings of every diagram category, and category-aware operations on them.
#pragma once

#include "diagmon/affine.hpp"
#include "diagmon/cobordism.hpp"
#include "diagmon/partition.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace diagmon {

using Json = nlohmann::json;

enum class Category {
    P,       // partitions
    Pd,      // partitions with a closed-component count
    PdBar,   // regular extension of Pd
    Cob,     // genus-labeled partitions with closed spectrum
    CobBar,  // regular extension of Cob
    Cob0,    // genus-labeled partitions, closed components dropped
    Cob0Bar, // regular extension of Cob0
    ATLe,    // affine diagrams, circles dropped
    ATL,     // affine diagrams with wrapping-circle count
    ATLd,    // affine diagrams with wrapping and contractible circle counts
    Ann,     // annular partitions
    AnnD,    // annular partitions with a circle count
};

Category parse_category(std::string_view name); // throws UnknownCategory
std::string_view category_name(Category c) noexcept;
bool is_regular(Category c) noexcept;

// Ann values are Partitions, AnnD values are DeformedPartitions.
using Value = std::variant<Partition, DeformedPartition, LabeledPartition, Cobordism, AffineDiagram, AffinePair,
                           AffineTriple>;

Json to_json(const Vertex& v);
Json to_json(const APoint& p);
Json to_json(const Partition& p);
Json to_json(const ClosedSpectrum& s);
Json to_json(const DeformedPartition& x);
Json to_json(const LabeledPartition& x);
Json to_json(const Cobordism& x);
Json to_json(const AffineDiagram& a);
Json to_json(const AffinePair& x);
Json to_json(const AffineTriple& x);
Json to_json(const Value& v);

Partition partition_from_json(const Json& j);
AffineDiagram affine_from_json(const Json& j);
ClosedSpectrum spectrum_from_json(const Json& j);

// Throws Parse on malformed JSON or missing fields, and the validation
// error of the category on well-formed but invalid values.
Value value_from_json(Category c, const Json& j);
Value parse_value(Category c, std::string_view text);
std::string print_value(const Value& v);

// True when v has the representation used by category c.
bool holds_category(Category c, const Value& v) noexcept;

struct ComposeResult {
    Value product;
    Json diagnostics;
};

ComposeResult compose_values(Category c, const Value& x, const Value& y);

enum class Involution { Star, Sigma, Rho };
Involution parse_involution(std::string_view name);
Value apply_involution(Category c, Involution which, const Value& x);

} // namespace diagmon

#pragma once

#include "ainf/dga.hpp"
#include "ainf/report.hpp"
#include "ainf/structure.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace ainf::cli {

using nlohmann::json;

inline constexpr const char* kAlgebraSchema = "ainf-algebra/1";
inline constexpr const char* kCertificateSchema = "ainf-certificate/1";

struct PdBlock {
    std::optional<int> connectivity;
    std::optional<int> top_degree;
};

/// One parsed algebra file. Exactly one of `dga` / `structure` is set;
/// "symplectic" files carry a dga plus omega.
struct AlgebraFile {
    std::string kind;  // "dga", "ainf" or "symplectic"
    std::optional<Dga> dga;
    std::shared_ptr<AInfStructure> structure;
    std::optional<Vector> omega;
    std::optional<int> level;
    std::optional<PdBlock> pd;
};

/// Throws MalformedInput on schema violations. `pmax` is the truncation
/// used for "ainf" files (raised to the largest arity present).
AlgebraFile parse_algebra(const json& j, int pmax);
/// Reads and parses; MalformedInput on I/O or JSON syntax errors. The raw
/// bytes are returned through `bytes` for digesting.
AlgebraFile load_algebra(const std::string& path, int pmax, std::string* bytes = nullptr);

/// "e1*e2 + 1/2*e3*e4 - e5": terms are an optional rational coefficient
/// followed by a basis label or a product of basis labels.
Vector parse_element(const Dga& a, const std::string& text);

json space_json(const GradedSpace& s);
/// label -> "p/q", keys in label order.
json vector_json(const GradedSpace& s, const Vector& v);
json map_json(const MultiLinearMap& m);
json linear_json(const GradedLinearMap& m);
/// Round-trips through parse_algebra as kind "ainf".
json structure_json(const AInfStructure& a);
json dga_json(const Dga& a);
json morphism_json(const AInfMorphism& f);
json report_json(const Report& r);

/// FNV-1a 64-bit digest, as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& bytes);

}  // namespace ainf::cli

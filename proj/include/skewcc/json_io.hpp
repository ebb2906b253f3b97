#pragma once

#include <json.hpp>

#include "skewcc/codes.hpp"

namespace skewcc {

using nlohmann::json;

/// JSON wire formats.
///
/// field: {"p": int, "s": int, "modulus": [int,...]? ascending, length s+1}
/// ring: {"field": field, "f_roots": [int,...], "g_roots": [int,...]}
/// automorphism tag: "id" | "psi" | {"theta": t}
/// ring element: flat array of k*l field-element integers (i outer, j
///   inner); a bare integer means the constant with that value everywhere
/// skew polynomial: {"autom": tag, "coeffs": [ring element,...]} ascending
/// code config: {"ring": ring, "n": int, "autom": tag, "alpha": element?,
///   "components": [{"i": int, "j": int, "gen": [int,...]},...]}  (i, j
///   1-based, gen ascending F_q indices), or "gen": skew polynomial.
///
/// Shape violations throw std::invalid_argument; key misses and type
/// mismatches surface as nlohmann exceptions. Both mean a bad config.

FieldSpec field_spec_from_json(const json& j);
json field_spec_to_json(const FieldSpec& spec);

Ring ring_from_json(const json& j);
json ring_to_json(const Ring& ring);

Autom autom_from_json(const json& j);
json autom_to_json(const Autom& a);

RingElement ring_element_from_json(const Ring& ring, const json& j);
json ring_element_to_json(const RingElement& e);

SkewPoly skew_poly_from_json(const Ring& ring, const json& j);
json skew_poly_to_json(const SkewPoly& f);

FieldPoly field_poly_from_json(const Field& field, Autom autom, const json& j);
json field_poly_to_json(const FieldPoly& f);

/// Parsed pieces of a code config, before construction.
struct CodeConfig {
    Ring ring;
    std::size_t n = 0;
    Autom autom;
    RingElement alpha;
    std::vector<std::pair<std::size_t, std::size_t>> comp_index;  // zero-based (i,j)
    std::vector<FieldPoly> comp_gens;
    SkewPoly gen;
    bool has_components = false;
    bool has_gen = false;
};

CodeConfig code_config_from_json(const json& j);

/// Builds the code: the component table when present, the ring-level
/// generator otherwise.
Code code_from_json(const json& j);

/// Self-contained report: ring, n, autom, alpha, generator (array and
/// pretty forms), component table, size, classification. Feeding it back
/// as a config reproduces the code.
json code_report(const Code& code);

json classification_to_json(const ShiftClass& c);

}  // namespace skewcc

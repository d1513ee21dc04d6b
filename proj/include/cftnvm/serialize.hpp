#pragma once

#include "cftnvm/nvm.hpp"

#include "json.hpp"

#include <string>

namespace cftnvm {

using ordered_json = nlohmann::ordered_json;

// { "order": n, "coeffs": ["num/den", ...] } in basis order 1, zeta, ...;
// integer coefficients print without the "/den" part.
ordered_json to_json(const CycNum& v);

// { "p": ..., "m": ..., "modulus": [c0, ..., 1], "generator": [g0, ...] }
ordered_json field_spec_json(const Field& f);

// Field element as its coefficient vector over the prime field.
ordered_json element_json(const FieldElement& a);

ordered_json to_json(const AddCharacter& psi);
ordered_json to_json(const MultCharacter& chi);
ordered_json to_json(const SubgroupChar& chi);

// Array of q coefficients in the canonical element order.
ordered_json to_json(const GroupAlgebraElement& f);

// { "chi": ..., "R": [...], "S": [...], "entries": [[...]] }
ordered_json to_json(const CftMatrix& M);

// { "q", "index", "chi_j", "method", "holds", "theorem_prediction",
//   "agreement", "witness", "minors_checked" } with nulls for absent parts.
ordered_json to_json(const NvmReport& r);

std::string report_csv_header();
std::string report_csv_row(const NvmReport& r);

// Fixed-precision complex rendering of the canonical embedding, for
// display next to exact values.
std::string approx_string(const CycNum& v);

}  // namespace cftnvm

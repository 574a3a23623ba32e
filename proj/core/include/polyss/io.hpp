#pragma once

// JSON instance files.
//
//   {"schema_version": "1", "field": {"kind": "prime", "p": 5}, "k": 3,
//    "cells": [{"deg": [0,0,0], "dim": 2}, ...],
//    "diff":  [{"i": 1, "from": [0,0,0], "matrix": [["1","0"], ...]}, ...],
//    "filtration": {"indices": [1, 2]}}
//
// or, for a snake diagram,
//
//   {"schema_version": "1", "field": {"kind": "rational"},
//    "snake": {"dims": {"A": 1, ..., "F": 2},
//              "maps": {"A->B": [...], "B->C": [...], "D->E": [...], "E->F": [...],
//                       "alpha": [...], "beta": [...], "gamma": [...]}}}
//
// Matrices are arrays of rows; entries are strings ("2/3") or integers. Omitted
// maps are zero. Unknown keys are rejected.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyss/polycomplex.hpp"
#include "polyss/snake.hpp"

namespace polyss {

inline constexpr const char* kSchemaVersion = "1";

struct Instance {
    std::string schema_version = kSchemaVersion;
    FieldSpec field = FieldSpec::rationals();
    std::variant<Polycomplex, SnakeDiagram> content{Polycomplex(FieldSpec::rationals(), 1)};
    /// Default index subset for filtration-dependent commands.
    std::optional<std::vector<std::size_t>> filtration;

    bool is_snake() const noexcept { return std::holds_alternative<SnakeDiagram>(content); }
    const Polycomplex& polycomplex() const;
    const SnakeDiagram& snake() const;
};

/// Parses and fully validates. Errors: parse (syntax, types, unknown keys), shape,
/// axiom (polycomplex identities, citing (i, j, x)), snake_input.
/// `field_override` reinterprets every entry over another field before validation.
Instance parse_instance(std::string_view text, std::optional<FieldSpec> field_override = std::nullopt);
Instance read_instance(const std::filesystem::path& path, std::optional<FieldSpec> field_override = std::nullopt);

/// Canonical serialization: fixed key order, cells in lexicographic order, string entries.
std::string serialize_instance(const Instance& instance);

/// "prime:5", "gf5", "5" or "rational" / "q".
FieldSpec parse_field(std::string_view text);

/// "1,2" -> {1, 2}.
std::vector<std::size_t> parse_index_list(std::string_view text);

} // namespace polyss

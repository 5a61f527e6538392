#pragma once

#include "arcmodal/grid.hpp"

#include <string>
#include <string_view>

namespace arcmodal {

/// The four text modalities. Names are the wire/CLI vocabulary.
enum class TextModality {
    row_only,
    col_only,
    ascii,
    json,
};

std::string_view to_string(TextModality m);
TextModality text_modality_from_string(std::string_view name);

/// Separator between the "R1: ..." / "A: ..." entries of row_only and
/// col_only. The double newline is the documented default; the single
/// newline variant must stay byte-exactly producible as well.
enum class RowSep {
    single_newline,
    double_newline,
};

inline constexpr RowSep kDefaultRowSep = RowSep::double_newline;

/// "R{n}: " prefix, digits concatenated, no trailing separator.
std::string encode_row_only(const Grid& g, RowSep sep = kDefaultRowSep);
/// "{col label}: " prefix, column read top-to-bottom; column A is the
/// first grid column.
std::string encode_col_only(const Grid& g, RowSep sep = kDefaultRowSep);
/// Space-separated digits per row, rows joined by single newlines.
std::string encode_ascii(const Grid& g);
/// Compact nested-array literal, e.g. "[[1,2],[3,4]]".
std::string encode_json(const Grid& g);

std::string encode_text(const Grid& g, TextModality m, RowSep sep = kDefaultRowSep);

} // namespace arcmodal

#include "arcmodal/text_encode.hpp"

namespace arcmodal {

namespace {

std::string_view sep_text(RowSep sep) {
    return sep == RowSep::single_newline ? "\n" : "\n\n";
}

} // namespace

std::string_view to_string(TextModality m) {
    switch (m) {
    case TextModality::row_only: return "row_only";
    case TextModality::col_only: return "col_only";
    case TextModality::ascii: return "ascii";
    case TextModality::json: return "json";
    }
    return "";
}

TextModality text_modality_from_string(std::string_view name) {
    if (name == "row_only") return TextModality::row_only;
    if (name == "col_only") return TextModality::col_only;
    if (name == "ascii") return TextModality::ascii;
    if (name == "json") return TextModality::json;
    throw ParseError("unknown text modality \"" + std::string(name) + "\"");
}

std::string encode_row_only(const Grid& g, RowSep sep) {
    std::string out;
    for (int r = 0; r < g.rows(); ++r) {
        if (r > 0) {
            out += sep_text(sep);
        }
        out += "R" + std::to_string(r + 1) + ": ";
        for (int c = 0; c < g.cols(); ++c) {
            out += static_cast<char>('0' + g.at(r, c));
        }
    }
    return out;
}

std::string encode_col_only(const Grid& g, RowSep sep) {
    std::string out;
    for (int c = 0; c < g.cols(); ++c) {
        if (c > 0) {
            out += sep_text(sep);
        }
        out += col_label(c) + ": ";
        for (int r = 0; r < g.rows(); ++r) {
            out += static_cast<char>('0' + g.at(r, c));
        }
    }
    return out;
}

std::string encode_ascii(const Grid& g) {
    std::string out;
    for (int r = 0; r < g.rows(); ++r) {
        if (r > 0) {
            out += '\n';
        }
        for (int c = 0; c < g.cols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += static_cast<char>('0' + g.at(r, c));
        }
    }
    return out;
}

std::string encode_json(const Grid& g) {
    std::string out = "[";
    for (int r = 0; r < g.rows(); ++r) {
        if (r > 0) {
            out += ',';
        }
        out += '[';
        for (int c = 0; c < g.cols(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += static_cast<char>('0' + g.at(r, c));
        }
        out += ']';
    }
    out += ']';
    return out;
}

std::string encode_text(const Grid& g, TextModality m, RowSep sep) {
    switch (m) {
    case TextModality::row_only: return encode_row_only(g, sep);
    case TextModality::col_only: return encode_col_only(g, sep);
    case TextModality::ascii: return encode_ascii(g);
    case TextModality::json: return encode_json(g);
    }
    throw ParseError("unknown text modality");
}

} // namespace arcmodal

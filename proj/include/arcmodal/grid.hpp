#pragma once

#include "arcmodal/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace arcmodal {

/// Color codes are the integers 0-9. Index this table with a code to get
/// the canonical name (0 = black, 1 = blue, ..., 9 = maroon).
inline constexpr std::array<std::string_view, 10> kColorNames = {
    "black", "blue", "red", "green", "yellow",
    "gray",  "magenta", "orange", "teal", "maroon",
};

inline constexpr int kMaxGridDim = 30;

bool is_valid_color(int code);

/// Rectangular matrix of color codes, 1..30 on each side. Immutable after
/// construction; all factory paths validate dimensions, rectangularity and
/// the 0-9 color range.
class Grid {
public:
    static Grid from_values(const std::vector<std::vector<int>>& values);
    static Grid filled(int rows, int cols, int color);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// row and col are 0-based.
    int at(int row, int col) const { return cells_[static_cast<size_t>(row) * cols_ + col]; }

    Grid transposed() const;
    Grid with_cell(int row, int col, int color) const;

    std::vector<std::vector<int>> to_values() const;

    bool operator==(const Grid& other) const = default;

private:
    Grid(int rows, int cols, std::vector<std::uint8_t> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {}

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// One cell address. Stored 0-based in both axes; the spreadsheet label
/// ("A1", "AC29") is the only external representation. Top-left is A1.
struct CellRef {
    int col = 0;
    int row = 0;

    auto operator<=>(const CellRef&) const = default;
};

/// Column index 0..29 -> "A".."Z","AA".."AD".
std::string col_label(int index);
/// Inverse of col_label; rejects anything outside "A".."AD".
int col_index(std::string_view label);

std::string format_cellref(const CellRef& ref);
CellRef parse_cellref(std::string_view label);

using CellSet = std::set<CellRef>;

/// Inclusive rectangle "B2:L4" -> the 33 cells it covers. A bare label is a
/// single-cell set.
CellSet cellset_parse_range(std::string_view range);
/// Union of comma/whitespace-free tokens, each a label or a range.
CellSet cellset_parse_tokens(const std::vector<std::string>& tokens);

bool cellset_within(const CellSet& cells, int rows, int cols);
std::string cellset_to_string(const CellSet& cells);

/// One ARC challenge: non-empty train pairs plus test pairs whose outputs
/// may be withheld.
struct TrainPair {
    Grid input;
    Grid output;
};

struct TestPair {
    Grid input;
    std::optional<Grid> output;
};

struct Task {
    std::string id;
    std::vector<TrainPair> train;
    std::vector<TestPair> test;
};

/// Parses the standard ARC task document ({"train": [...], "test": [...]},
/// entries {"input": [[...]], "output": [[...]]}). The id is the caller's
/// (normally the source filename stem).
Task parse_task(std::string_view json_text, std::string_view id);
Task load_task(const std::string& path);

} // namespace arcmodal

#include "arcmodal/grid.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace arcmodal {

namespace {

int checked_dim(size_t n, const char* axis) {
    if (n < 1 || n > static_cast<size_t>(kMaxGridDim)) {
        throw ParseError(std::string("grid ") + axis + " count " + std::to_string(n) +
                         " outside 1.." + std::to_string(kMaxGridDim));
    }
    return static_cast<int>(n);
}

} // namespace

bool is_valid_color(int code) {
    return code >= 0 && code <= 9;
}

Grid Grid::from_values(const std::vector<std::vector<int>>& values) {
    int rows = checked_dim(values.size(), "row");
    int cols = checked_dim(values.front().size(), "column");
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : values) {
        if (static_cast<int>(row.size()) != cols) {
            throw ParseError("ragged grid: row length " + std::to_string(row.size()) +
                             " differs from " + std::to_string(cols));
        }
        for (int v : row) {
            if (!is_valid_color(v)) {
                throw ParseError("color out of range: " + std::to_string(v));
            }
            cells.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return Grid(rows, cols, std::move(cells));
}

Grid Grid::filled(int rows, int cols, int color) {
    checked_dim(static_cast<size_t>(rows), "row");
    checked_dim(static_cast<size_t>(cols), "column");
    if (!is_valid_color(color)) {
        throw ParseError("color out of range: " + std::to_string(color));
    }
    return Grid(rows, cols,
                std::vector<std::uint8_t>(static_cast<size_t>(rows) * cols,
                                          static_cast<std::uint8_t>(color)));
}

Grid Grid::transposed() const {
    std::vector<std::uint8_t> cells(cells_.size());
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            cells[static_cast<size_t>(c) * rows_ + r] = cells_[static_cast<size_t>(r) * cols_ + c];
        }
    }
    return Grid(cols_, rows_, std::move(cells));
}

Grid Grid::with_cell(int row, int col, int color) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw ParseError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside grid");
    }
    if (!is_valid_color(color)) {
        throw ParseError("color out of range: " + std::to_string(color));
    }
    auto cells = cells_;
    cells[static_cast<size_t>(row) * cols_ + col] = static_cast<std::uint8_t>(color);
    return Grid(rows_, cols_, std::move(cells));
}

std::vector<std::vector<int>> Grid::to_values() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        out[r].reserve(static_cast<size_t>(cols_));
        for (int c = 0; c < cols_; ++c) {
            out[r].push_back(at(r, c));
        }
    }
    return out;
}

std::string col_label(int index) {
    if (index < 0 || index >= kMaxGridDim) {
        throw ParseError("column index " + std::to_string(index) + " outside 0.." +
                         std::to_string(kMaxGridDim - 1));
    }
    if (index < 26) {
        return std::string(1, static_cast<char>('A' + index));
    }
    // 26..29 -> AA..AD; grids never exceed 30 columns.
    return std::string("A") + static_cast<char>('A' + (index - 26));
}

int col_index(std::string_view label) {
    if (label.size() == 1 && label[0] >= 'A' && label[0] <= 'Z') {
        return label[0] - 'A';
    }
    if (label.size() == 2 && label[0] == 'A' && label[1] >= 'A' && label[1] <= 'D') {
        return 26 + (label[1] - 'A');
    }
    throw ParseError("column label \"" + std::string(label) + "\" outside A..AD");
}

std::string format_cellref(const CellRef& ref) {
    return col_label(ref.col) + std::to_string(ref.row + 1);
}

CellRef parse_cellref(std::string_view label) {
    size_t i = 0;
    while (i < label.size() && std::isalpha(static_cast<unsigned char>(label[i]))) {
        ++i;
    }
    if (i == 0) {
        throw ParseError("cell label \"" + std::string(label) + "\" must start with letters");
    }
    std::string_view letters = label.substr(0, i);
    std::string_view digits = label.substr(i);
    if (digits.empty()) {
        throw ParseError("cell label \"" + std::string(label) + "\" missing row number");
    }
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError("cell label \"" + std::string(label) + "\" has trailing garbage");
        }
    }
    int col = col_index(letters);
    int row_number = 0;
    for (char ch : digits) {
        row_number = row_number * 10 + (ch - '0');
        if (row_number > kMaxGridDim) {
            break;
        }
    }
    if (row_number < 1 || row_number > kMaxGridDim) {
        throw ParseError("row number in \"" + std::string(label) + "\" outside 1.." +
                         std::to_string(kMaxGridDim));
    }
    return CellRef{col, row_number - 1};
}

CellSet cellset_parse_range(std::string_view range) {
    size_t colon = range.find(':');
    if (colon == std::string_view::npos) {
        CellRef single = parse_cellref(range);
        return CellSet{single};
    }
    CellRef start = parse_cellref(range.substr(0, colon));
    CellRef end = parse_cellref(range.substr(colon + 1));
    if (end.col < start.col || end.row < start.row) {
        throw ParseError("inverted range \"" + std::string(range) + "\"");
    }
    CellSet cells;
    for (int r = start.row; r <= end.row; ++r) {
        for (int c = start.col; c <= end.col; ++c) {
            cells.insert(CellRef{c, r});
        }
    }
    return cells;
}

CellSet cellset_parse_tokens(const std::vector<std::string>& tokens) {
    CellSet cells;
    for (const auto& token : tokens) {
        CellSet part = cellset_parse_range(token);
        cells.insert(part.begin(), part.end());
    }
    return cells;
}

bool cellset_within(const CellSet& cells, int rows, int cols) {
    for (const CellRef& ref : cells) {
        if (ref.row < 0 || ref.row >= rows || ref.col < 0 || ref.col >= cols) {
            return false;
        }
    }
    return true;
}

std::string cellset_to_string(const CellSet& cells) {
    std::string out;
    for (const CellRef& ref : cells) {
        if (!out.empty()) {
            out += ",";
        }
        out += format_cellref(ref);
    }
    return out;
}

namespace {

Grid grid_from_json(const nlohmann::json& node, const std::string& where) {
    if (!node.is_array() || node.empty()) {
        throw ParseError(where + ": grid must be a non-empty array of rows");
    }
    std::vector<std::vector<int>> values;
    values.reserve(node.size());
    for (const auto& row : node) {
        if (!row.is_array()) {
            throw ParseError(where + ": grid row must be an array");
        }
        std::vector<int> cells;
        cells.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer()) {
                throw ParseError(where + ": cell values must be integers");
            }
            cells.push_back(v.get<int>());
        }
        values.push_back(std::move(cells));
    }
    try {
        return Grid::from_values(values);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace

Task parse_task(std::string_view json_text, std::string_view id) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed task document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("train") || !doc["train"].is_array()) {
        throw ParseError("task document missing \"train\" array");
    }
    Task task;
    task.id = std::string(id);
    int index = 0;
    for (const auto& pair : doc["train"]) {
        std::string where = "train[" + std::to_string(index++) + "]";
        if (!pair.is_object() || !pair.contains("input") || !pair.contains("output")) {
            throw ParseError(where + ": expected {\"input\", \"output\"}");
        }
        task.train.push_back(TrainPair{grid_from_json(pair["input"], where + ".input"),
                                       grid_from_json(pair["output"], where + ".output")});
    }
    if (task.train.empty()) {
        throw ParseError("task has an empty train list");
    }
    if (doc.contains("test")) {
        if (!doc["test"].is_array()) {
            throw ParseError("task \"test\" must be an array");
        }
        index = 0;
        for (const auto& pair : doc["test"]) {
            std::string where = "test[" + std::to_string(index++) + "]";
            if (!pair.is_object() || !pair.contains("input")) {
                throw ParseError(where + ": expected {\"input\"[, \"output\"]}");
            }
            TestPair t{grid_from_json(pair["input"], where + ".input"), std::nullopt};
            if (pair.contains("output") && !pair["output"].is_null()) {
                t.output = grid_from_json(pair["output"], where + ".output");
            }
            task.test.push_back(std::move(t));
        }
    }
    return task;
}

Task load_task(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open task file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_task(buf.str(), std::filesystem::path(path).stem().string());
}

} // namespace arcmodal

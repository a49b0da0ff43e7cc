#include "alm/string_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "alm/errors.hpp"

namespace alm {

namespace {

bool valid_char(char ch) { return ch == '0' || ch == '1' || ch == '*'; }

void validate_cell(const std::string& cell) {
    if (cell.empty()) throw Error("string-matrix cell must be non-empty");
    for (char ch : cell)
        if (!valid_char(ch))
            throw Error("string-matrix cell may contain only '0', '1', '*': \"" + cell + "\"");
}

}  // namespace

Layer::Layer(int size, char fill) : size_(size) {
    if (size < 1) throw Error("Layer: size must be >= 1");
    if (!valid_char(fill)) throw Error("Layer: fill must be '0', '1' or '*'");
    cells_.assign(static_cast<size_t>(size) * size, fill);
}

Layer Layer::from_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw Error("Layer::from_rows: empty grid");
    Layer layer(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw Error("Layer::from_rows: grid is not square");
        for (int c = 0; c < n; ++c) layer.set(r, c, rows[r][c]);
    }
    return layer;
}

void Layer::set(int row, int col, char value) {
    if (!valid_char(value)) throw Error("Layer: cell must be '0', '1' or '*'");
    cells_[static_cast<size_t>(row) * size_ + col] = value;
}

StringMatrix StringMatrix::constant(int size, char value) {
    if (size < 1) throw Error("StringMatrix: size must be >= 1");
    if (!valid_char(value)) throw Error("StringMatrix: cell must be '0', '1' or '*'");
    StringMatrix m;
    m.size_ = size;
    m.depth_ = 1;
    m.cells_.assign(static_cast<size_t>(size) * size, std::string(1, value));
    return m;
}

StringMatrix StringMatrix::from_cells(const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw Error("StringMatrix::from_cells: empty grid");
    StringMatrix m;
    m.size_ = n;
    m.cells_.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw Error("StringMatrix::from_cells: grid is not square");
        for (const std::string& cell : row) {
            validate_cell(cell);
            if (m.depth_ == 0) m.depth_ = static_cast<int>(cell.size());
            if (static_cast<int>(cell.size()) != m.depth_)
                throw NonUniformDepth("string-matrix cells must share one depth");
            m.cells_.push_back(cell);
        }
    }
    return m;
}

StringMatrix StringMatrix::from_layer(const Layer& layer) {
    StringMatrix m;
    m.size_ = layer.size();
    m.depth_ = 1;
    m.cells_.reserve(static_cast<size_t>(m.size_) * m.size_);
    for (int r = 0; r < m.size_; ++r)
        for (int c = 0; c < m.size_; ++c) m.cells_.emplace_back(1, layer.at(r, c));
    return m;
}

StringMatrix pad_to_square(const std::vector<std::vector<std::string>>& rows) {
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0 || rows.front().empty()) throw Error("pad_to_square: empty grid");
    const int ncols = static_cast<int>(rows.front().size());
    int depth = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != ncols)
            throw Error("pad_to_square: ragged rows");
        for (const std::string& cell : row) {
            validate_cell(cell);
            if (depth == 0) depth = static_cast<int>(cell.size());
            if (static_cast<int>(cell.size()) != depth)
                throw NonUniformDepth("pad_to_square: cells must share one depth");
        }
    }
    const int n = std::max(nrows, ncols);
    const std::string filler(static_cast<size_t>(depth), '*');
    std::vector<std::vector<std::string>> grid(static_cast<size_t>(n),
                                               std::vector<std::string>(static_cast<size_t>(n), filler));
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) grid[r][c] = rows[r][c];
    return StringMatrix::from_cells(grid);
}

StringMatrix pad_cells(const StringMatrix& m, int new_size) {
    if (m.empty()) throw Error("pad_cells: empty designator has no cells");
    if (new_size < m.size_) throw Error("pad_cells: cannot shrink a matrix");
    if (new_size == m.size_) return m;
    StringMatrix out;
    out.size_ = new_size;
    out.depth_ = m.depth_;
    const std::string filler(static_cast<size_t>(m.depth_), '*');
    out.cells_.assign(static_cast<size_t>(new_size) * new_size, filler);
    for (int r = 0; r < m.size_; ++r)
        for (int c = 0; c < m.size_; ++c)
            out.cells_[static_cast<size_t>(r) * new_size + c] = m.cell(r, c);
    return out;
}

StringMatrix save(const StringMatrix& a, const StringMatrix& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    // Canonical order: larger operand first; ties keep argument order.
    const StringMatrix& first = (b.size_ > a.size_) ? b : a;
    const StringMatrix& second = (&first == &a) ? b : a;
    const int n = first.size_;
    const StringMatrix f = pad_cells(first, n);
    const StringMatrix s = pad_cells(second, n);
    StringMatrix out;
    out.size_ = n;
    out.depth_ = f.depth_ + s.depth_;
    out.cells_.reserve(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < f.cells_.size(); ++i) out.cells_.push_back(f.cells_[i] + s.cells_[i]);
    return out;
}

Layer left(const StringMatrix& m) {
    if (m.empty()) throw Error("left: empty designator has no layers");
    Layer out(m.size());
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c) out.set(r, c, m.cell(r, c).front());
    return out;
}

Layer right(const StringMatrix& m) {
    if (m.empty()) throw Error("right: empty designator has no layers");
    Layer out(m.size());
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c) out.set(r, c, m.cell(r, c).back());
    return out;
}

StringMatrix tail(const StringMatrix& m) {
    if (m.empty()) throw Error("tail: empty designator has no layers");
    if (m.depth() <= 2) return StringMatrix{};
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(m.size()));
    for (int r = 0; r < m.size(); ++r) {
        rows[r].reserve(static_cast<size_t>(m.size()));
        for (int c = 0; c < m.size(); ++c)
            rows[r].push_back(m.cell(r, c).substr(1, static_cast<size_t>(m.depth()) - 2));
    }
    return StringMatrix::from_cells(rows);
}

StringMatrix l_prime(const StringMatrix& m) {
    return save(tail(m), StringMatrix::from_layer(right(m)));
}

std::vector<Layer> layers(const StringMatrix& m) {
    std::vector<Layer> out;
    if (m.empty()) return out;
    out.reserve(static_cast<size_t>(m.depth()));
    for (int k = 0; k < m.depth(); ++k) {
        Layer layer(m.size());
        for (int r = 0; r < m.size(); ++r)
            for (int c = 0; c < m.size(); ++c)
                layer.set(r, c, m.cell(r, c)[static_cast<size_t>(k)]);
        out.push_back(std::move(layer));
    }
    return out;
}

std::string format_string_matrix(const StringMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) {
            if (c) out << ' ';
            out << m.cell(r, c);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<StringMatrix> parse_string_matrices(const std::string& text) {
    std::vector<StringMatrix> out;
    std::vector<std::vector<std::string>> block;
    std::istringstream in(text);
    std::string line;
    auto flush = [&] {
        if (!block.empty()) {
            out.push_back(pad_to_square(block));
            block.clear();
        }
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream row_in(line);
        std::vector<std::string> row;
        std::string token;
        while (row_in >> token) row.push_back(token);
        if (row.empty()) {
            flush();
            continue;
        }
        block.push_back(std::move(row));
    }
    flush();
    return out;
}

StringMatrix parse_string_matrix(const std::string& text) {
    const std::vector<StringMatrix> all = parse_string_matrices(text);
    if (all.size() != 1)
        throw ParseError("expected exactly one string-matrix block, found " +
                         std::to_string(all.size()));
    return all.front();
}

}  // namespace alm

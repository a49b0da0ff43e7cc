#pragma once

#include <string>
#include <vector>

namespace alm {

// Square single-character grid over {'0','1','*'}; the left/right character
// projections of a string matrix live here.
class Layer {
public:
    explicit Layer(int size, char fill = '*');
    static Layer from_rows(const std::vector<std::string>& rows);

    int size() const { return size_; }
    char at(int row, int col) const { return cells_[static_cast<size_t>(row) * size_ + col]; }
    void set(int row, int col, char value);

    // All cells concatenated row-major; used as a canonical sort key.
    const std::string& flat() const { return cells_; }

    bool operator==(const Layer&) const = default;

private:
    int size_ = 0;
    std::string cells_;
};

// Square matrix whose cells are equal-length strings over {'0','1','*'}.
// The character string of a cell records the cell's whole operand history;
// depth is the common string length. A default-constructed matrix is the
// empty designator (depth 0) used for the tail of shallow matrices.
class StringMatrix {
public:
    StringMatrix() = default;

    // Uniform depth-1 matrix of one character.
    static StringMatrix constant(int size, char value);

    // Validated square build; every cell must share one depth.
    static StringMatrix from_cells(const std::vector<std::vector<std::string>>& rows);

    static StringMatrix from_layer(const Layer& layer);

    bool empty() const { return depth_ == 0; }
    int size() const { return size_; }
    int depth() const { return depth_; }

    const std::string& cell(int row, int col) const {
        return cells_[static_cast<size_t>(row) * size_ + col];
    }

    bool operator==(const StringMatrix&) const = default;

private:
    friend StringMatrix pad_cells(const StringMatrix&, int);
    friend StringMatrix save(const StringMatrix&, const StringMatrix&);
    friend StringMatrix complement_sm(const StringMatrix&);

    int size_ = 0;
    int depth_ = 0;
    std::vector<std::string> cells_;
};

// Embeds a rectangular cell grid into the smallest containing square,
// top-left aligned, filling new cells with '*'-strings of the common depth.
// Throws NonUniformDepth when cell lengths differ.
StringMatrix pad_to_square(const std::vector<std::vector<std::string>>& rows);

// Grows a square matrix to new_size the same way. Identity when new_size
// equals the current size.
StringMatrix pad_cells(const StringMatrix& m, int new_size);

// Elementwise string concatenation after padding both operands to the larger
// size. Canonical order: the larger operand's characters come first; equal
// sizes keep argument order. The empty designator is a neutral operand.
StringMatrix save(const StringMatrix& a, const StringMatrix& b);

Layer left(const StringMatrix& m);
Layer right(const StringMatrix& m);

// Middle substring of every cell (depth d-2); the empty designator when
// depth <= 2.
StringMatrix tail(const StringMatrix& m);

// Save(T(m), R(m)): everything except the left character, kept in order.
StringMatrix l_prime(const StringMatrix& m);

// Decomposition into depth-many single-character layers.
std::vector<Layer> layers(const StringMatrix& m);

// Text format: one matrix per block, rows of whitespace-separated cell
// strings, blocks separated by blank lines.
std::string format_string_matrix(const StringMatrix& m);
std::vector<StringMatrix> parse_string_matrices(const std::string& text);
StringMatrix parse_string_matrix(const std::string& text);

}  // namespace alm

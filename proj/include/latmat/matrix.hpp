#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latmat/rational.hpp"

namespace latmat {

// Dense matrix of exact rationals, row-major. Entries stay in canonical
// reduced form because mpq arithmetic preserves it.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(const std::vector<Rat>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transposed() const;

    bool operator==(const RatMatrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }
    bool operator!=(const RatMatrix& other) const { return !(*this == other); }

    // One row per line, canonical rationals separated by single spaces.
    std::string to_text() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace latmat

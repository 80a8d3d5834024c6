#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcm/field.hpp"

namespace mcm {

// Dense matrix over an exact field.  Immutable in spirit: operations return
// new values; setters exist only for construction.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field = FieldSpec::rationals());

    static ExactMatrix identity(std::size_t n, FieldSpec field = FieldSpec::rationals());
    static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows,
                                 FieldSpec field = FieldSpec::rationals());
    // Column vector.
    static ExactMatrix column(const std::vector<Rat>& entries,
                              FieldSpec field = FieldSpec::rationals());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rat& v) { data_[i * cols_ + j] = field_.normalize(v); }

    bool is_zero() const;
    bool operator==(const ExactMatrix& other) const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    ExactMatrix scaled(const Rat& c) const;

    // Copies column j out as a coordinate vector.
    std::vector<Rat> column_vector(std::size_t j) const;

    std::string str() const;

private:
    void check_same_shape(const ExactMatrix& other) const;
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Rat> data_;
};

struct RrefResult {
    ExactMatrix reduced;               // transform * input
    std::vector<std::size_t> pivots;   // pivot columns, increasing
    ExactMatrix transform;             // invertible rows x rows
};

// Reduced row echelon form with deterministic pivoting: columns scanned left to
// right, pivot is the first nonzero entry from the top among unused rows.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Columns form a basis of the right null space; m * result = 0.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Columns form a basis of the column space (the pivot columns of m).
ExactMatrix image_basis(const ExactMatrix& m);

// Solves a x = b (b may have several columns); absent when inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

// True if every column of sub is in the column span of space.
bool columns_contained(const ExactMatrix& space, const ExactMatrix& sub);

// Flattens column-major; kron-compatible: vec(B M A) = (A^T (x) B) vec(M).
ExactMatrix vec(const ExactMatrix& m);
ExactMatrix unvec(const ExactMatrix& v, std::size_t rows, std::size_t cols);

}  // namespace mcm

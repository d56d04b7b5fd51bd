#pragma once

#include <cstddef>
#include <vector>

#include "mbe/bitvec.hpp"

namespace mbe::gf2 {

/// Row-major matrix over GF(2). All rows share one length.
struct Matrix {
    std::vector<BitVec> rows;

    Matrix() = default;
    explicit Matrix(std::vector<BitVec> r);

    static Matrix identity(std::size_t n);

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
    bool square() const { return row_count() == col_count(); }
};

/// Dimension of the row space. Does not mutate the input.
std::size_t rank(const Matrix& m);
std::size_t rank(std::vector<BitVec> rows);

/// True iff the rows are linearly independent (rank == row count).
/// Throws std::invalid_argument on a length mismatch among rows.
bool is_independent(const std::vector<BitVec>& rows);

/// Determinant of a square matrix: 1 iff the rows form a basis of GF(2)^r.
int det(const Matrix& m);

/// Inverse of a square matrix with det = 1 (over GF(2) the adjugate equals
/// the inverse). Throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);

/// Entry j of the result equals det of the minor obtained by deleting row
/// `row` and column j from P. Signs vanish mod 2, so this is column `row`
/// of inverse(P). Consequently sum_j P[row][j] * result[j] = 1.
/// Requires det(P) = 1; `row` is 0-based.
BitVec row_replacement_minors(const Matrix& p, std::size_t row);

/// Incremental elimination basis: maintains a reduced set of rows spanning
/// everything inserted so far. Used for span-membership queries.
class EliminationBasis {
public:
    explicit EliminationBasis(std::size_t dim) : dim_(dim) {}

    /// Insert v into the span. Returns true if v was independent of the
    /// current span (i.e. the rank grew).
    bool insert(BitVec v);

    /// True iff v lies in the current span.
    bool contains(BitVec v) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t dim() const { return dim_; }

private:
    // Reduce v against stored pivot rows; returns the residue.
    BitVec reduce(BitVec v) const;

    std::size_t dim_;
    std::vector<std::pair<int, BitVec>> pivots_; // (pivot position, row)
};

} // namespace mbe::gf2

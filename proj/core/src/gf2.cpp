#include "mbe/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbe::gf2 {

Matrix::Matrix(std::vector<BitVec> r) : rows(std::move(r)) {
    for (const auto& row : rows) {
        if (row.size() != rows[0].size()) {
            throw std::invalid_argument("gf2::Matrix: rows of unequal length");
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    std::vector<BitVec> rows(n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
    return Matrix(std::move(rows));
}

namespace {

// Forward elimination, pivoting on the first set bit of each row.
// Returns the number of nonzero rows left (= rank). Mutates `rows`.
std::size_t eliminate(std::vector<BitVec>& rows) {
    std::size_t r = 0;
    std::vector<std::pair<int, std::size_t>> pivots; // (bit, row index)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [bit, at] : pivots) {
            if (rows[i].test(static_cast<std::size_t>(bit))) {
                rows[i] ^= rows[at];
            }
        }
        int p = rows[i].first_set();
        if (p >= 0) {
            pivots.emplace_back(p, i);
            ++r;
        }
    }
    return r;
}

} // namespace

std::size_t rank(std::vector<BitVec> rows) {
    for (const auto& row : rows) {
        if (row.size() != rows[0].size()) {
            throw std::invalid_argument("gf2::rank: rows of unequal length");
        }
    }
    return eliminate(rows);
}

std::size_t rank(const Matrix& m) { return rank(m.rows); }

bool is_independent(const std::vector<BitVec>& rows) {
    if (rows.empty()) return true;
    return rank(rows) == rows.size();
}

int det(const Matrix& m) {
    if (!m.square()) {
        throw std::invalid_argument("gf2::det: matrix is not square");
    }
    if (m.row_count() == 0) return 1;
    return rank(m) == m.row_count() ? 1 : 0;
}

Matrix inverse(const Matrix& m) {
    if (!m.square()) {
        throw std::invalid_argument("gf2::inverse: matrix is not square");
    }
    const std::size_t n = m.row_count();
    std::vector<BitVec> work = m.rows;
    std::vector<BitVec> inv = Matrix::identity(n).rows;

    // Gauss-Jordan with the identity carried alongside.
    std::vector<bool> used(n, false);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && work[i].test(col)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            throw std::invalid_argument("gf2::inverse: singular matrix");
        }
        used[pivot] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != pivot && work[i].test(col)) {
                work[i] ^= work[pivot];
                inv[i] ^= inv[pivot];
            }
        }
        if (pivot != col) {
            std::swap(work[pivot], work[col]);
            std::swap(inv[pivot], inv[col]);
            used[pivot] = used[col];
            used[col] = true;
        }
    }
    return Matrix(std::move(inv));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.col_count() != b.row_count()) {
        throw std::invalid_argument("gf2::multiply: shape mismatch");
    }
    std::vector<BitVec> out(a.row_count(), BitVec(b.col_count()));
    for (std::size_t i = 0; i < a.row_count(); ++i) {
        for (std::size_t k = 0; k < a.col_count(); ++k) {
            if (a.rows[i].test(k)) out[i] ^= b.rows[k];
        }
    }
    return Matrix(std::move(out));
}

BitVec row_replacement_minors(const Matrix& p, std::size_t row) {
    if (!p.square()) {
        throw std::invalid_argument("row_replacement_minors: not square");
    }
    if (row >= p.row_count()) {
        throw std::invalid_argument("row_replacement_minors: row out of range");
    }
    Matrix inv = inverse(p); // throws if singular
    BitVec minors(p.row_count());
    for (std::size_t j = 0; j < p.row_count(); ++j) {
        if (inv.rows[j].test(row)) minors.set(j);
    }
    return minors;
}

bool EliminationBasis::insert(BitVec v) {
    if (v.size() != dim_) {
        throw std::invalid_argument("EliminationBasis: dimension mismatch");
    }
    v = reduce(std::move(v));
    int p = v.first_set();
    if (p < 0) return false;
    pivots_.emplace_back(p, std::move(v));
    // Keep pivots sorted by position so reduce() stays a single sweep.
    std::sort(pivots_.begin(), pivots_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
}

bool EliminationBasis::contains(BitVec v) const {
    return reduce(std::move(v)).none();
}

BitVec EliminationBasis::reduce(BitVec v) const {
    for (const auto& [pos, row] : pivots_) {
        if (v.test(static_cast<std::size_t>(pos))) v ^= row;
    }
    return v;
}

} // namespace mbe::gf2

#pragma once

// Row spans of matrices over Z/p^{m+1}, compared through the Howell normal form.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bsroots/chainring.hpp"

namespace bsroots {

class Matrix {
public:
    using Row = std::vector<std::uint64_t>;

    Matrix(ChainRing ring, std::size_t ncols) : ring_(ring), ncols_(ncols) {}
    /// Entries are reduced into [0, p^{m+1}); throws std::invalid_argument on ragged rows.
    Matrix(ChainRing ring, std::size_t ncols, std::vector<Row> rows);

    const ChainRing& ring() const { return ring_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t nrows() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(std::size_t i) const { return rows_[i]; }

    void add_row(Row row);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    ChainRing ring_;
    std::size_t ncols_;
    std::vector<Row> rows_;
};

/// Howell normal form: echelon rows with pivots exactly p^j, entries above each
/// pivot reduced into [0, p^j), zero rows dropped, and the Howell property
/// (every span element with k leading zeros is spanned by the rows with at least
/// k leading zeros). Unique per row span.
Matrix howell_form(const Matrix& m);

/// Throws std::invalid_argument when the column counts differ.
bool spans_equal(const Matrix& a, const Matrix& b);

/// Throws std::invalid_argument when v.size() != m.ncols().
bool span_contains(const Matrix& m, std::span<const std::uint64_t> v);

}  // namespace bsroots

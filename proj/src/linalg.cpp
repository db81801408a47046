#include "bsroots/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bsroots {

namespace {

using Row = Matrix::Row;

std::size_t leading_column(const Row& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return c;
    return row.size();
}

// row -= factor * pivot (entrywise mod p^{m+1}).
void sub_scaled(const ChainRing& ring, Row& row, const Row& pivot, std::uint64_t factor,
                std::size_t from) {
    if (factor == 0) return;
    const Scalar f = ring.from_unsigned(factor);
    for (std::size_t c = from; c < row.size(); ++c) {
        if (pivot[c] == 0) continue;
        row[c] = ring.sub(ring.from_unsigned(row[c]), ring.mul(f, ring.from_unsigned(pivot[c]))).value;
    }
}

Row scaled(const ChainRing& ring, const Row& row, Scalar factor) {
    Row out(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
        out[c] = ring.mul(factor, ring.from_unsigned(row[c])).value;
    return out;
}

bool is_zero_row(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace

Matrix::Matrix(ChainRing ring, std::size_t ncols, std::vector<Row> rows)
    : ring_(ring), ncols_(ncols) {
    rows_.reserve(rows.size());
    for (auto& r : rows) add_row(std::move(r));
}

void Matrix::add_row(Row row) {
    if (row.size() != ncols_) throw std::invalid_argument("row length does not match ncols");
    for (auto& x : row) x %= ring_.modulus();
    rows_.push_back(std::move(row));
}

Matrix howell_form(const Matrix& m) {
    const ChainRing& ring = m.ring();
    std::vector<Row> pool;
    for (const auto& r : m.rows())
        if (!is_zero_row(r)) pool.push_back(r);

    std::vector<Row> pivots;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < m.ncols() && !pool.empty(); ++col) {
        // Row of minimal valuation in this column among the unprocessed rows.
        std::size_t best = pool.size();
        unsigned best_val = ring.length();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            unsigned v = ring.valuation_of(pool[i][col]);
            if (v < best_val) {
                best_val = v;
                best = i;
            }
        }
        if (best == pool.size()) continue;

        Row pivot = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        const Scalar lead = ring.from_unsigned(pivot[col]);
        pivot = scaled(ring, pivot, ring.invert(ring.unit_part(lead)));  // pivot entry is p^j

        const std::uint64_t pj = pivot[col];
        for (auto& r : pool) {
            if (r[col] == 0) continue;
            sub_scaled(ring, r, pivot, r[col] / pj, col);
        }
        // The annihilator multiple of the pivot row keeps the Howell property.
        Row ann = scaled(ring, pivot, ring.p_power(ring.length() - best_val));
        if (!is_zero_row(ann)) pool.push_back(std::move(ann));
        std::erase_if(pool, is_zero_row);

        pivots.push_back(std::move(pivot));
        pivot_cols.push_back(col);
    }

    // Reduce entries above each pivot into [0, p^j), left to right.
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const std::size_t col = pivot_cols[k];
        const std::uint64_t pj = pivots[k][col];
        for (std::size_t i = 0; i < k; ++i)
            sub_scaled(ring, pivots[i], pivots[k], pivots[i][col] / pj, col);
    }
    return Matrix(ring, m.ncols(), std::move(pivots));
}

bool spans_equal(const Matrix& a, const Matrix& b) {
    if (a.ncols() != b.ncols()) throw std::invalid_argument("spans_equal: column counts differ");
    return howell_form(a).rows() == howell_form(b).rows();
}

bool span_contains(const Matrix& m, std::span<const std::uint64_t> v) {
    if (v.size() != m.ncols()) throw std::invalid_argument("span_contains: dimension mismatch");
    const ChainRing& ring = m.ring();
    const Matrix h = howell_form(m);
    Row rest(v.begin(), v.end());
    for (auto& x : rest) x %= ring.modulus();
    std::size_t k = 0;
    while (true) {
        const std::size_t col = leading_column(rest);
        if (col == rest.size()) return true;
        while (k < h.nrows() && leading_column(h.row(k)) < col) ++k;
        if (k == h.nrows() || leading_column(h.row(k)) != col) return false;
        const std::uint64_t pj = h.row(k)[col];
        if (ring.valuation_of(rest[col]) < ring.valuation_of(pj)) return false;
        sub_scaled(ring, rest, h.row(k), rest[col] / pj, col);
    }
}

}  // namespace bsroots

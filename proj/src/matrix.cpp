#include "frobsig/matrix.hpp"

#include <algorithm>

namespace frobsig {

bool RowEchelon::insert(std::vector<fp_t> row) {
    reduce(row);
    size_t piv = cols_;
    for (size_t c = 0; c < cols_; ++c) {
        if (row[c] != 0) {
            piv = c;
            break;
        }
    }
    if (piv == cols_) return false;
    fp_t inv = field_.inv(row[piv]);
    if (inv != 1)
        for (size_t c = piv; c < cols_; ++c) row[c] = field_.mul(row[c], inv);
    // keep pivots sorted to make later reductions one pass
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

void RowEchelon::reduce(std::vector<fp_t>& row) const {
    const fp_t p = field_.p();
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t piv = pivots_[i];
        fp_t c = row[piv];
        if (c == 0) continue;
        fp_t m = p - c;  // row += m * rows_[i], pivot becomes 0
        const auto& src = rows_[i];
        for (size_t j = piv; j < cols_; ++j) {
            if (src[j]) row[j] = (row[j] + m * src[j]) % p;
        }
    }
}

std::vector<std::vector<fp_t>> RowEchelon::kernel_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (size_t piv : pivots_) is_pivot[piv] = true;
    std::vector<std::vector<fp_t>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<fp_t> v(cols_, 0);
        v[fc] = 1;
        // back-substitute: pivot rows are fully reduced against each other
        // only lazily, so solve from the bottom up.
        for (size_t i = rows_.size(); i-- > 0;) {
            fp_t s = 0;
            const auto& r = rows_[i];
            for (size_t j = pivots_[i] + 1; j < cols_; ++j)
                if (r[j] && v[j]) s = (s + r[j] * v[j]) % field_.p();
            v[pivots_[i]] = field_.neg(s);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int matrix_rank(const FpMatrix& m) {
    RowEchelon ech(m.field(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        ech.insert(std::vector<fp_t>(m.row(r), m.row(r) + m.cols()));
    return static_cast<int>(ech.rank());
}

std::optional<std::vector<fp_t>> solve_linear(const FpMatrix& m, const std::vector<fp_t>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    const size_t n = m.cols();
    RowEchelon ech(m.field(), n + 1);  // augmented
    for (size_t r = 0; r < m.rows(); ++r) {
        std::vector<fp_t> row(n + 1);
        std::copy(m.row(r), m.row(r) + n, row.begin());
        row[n] = rhs[r];
        ech.insert(std::move(row));
    }
    // inconsistent iff a pivot lives in the augmented column
    for (size_t piv : ech.pivot_cols())
        if (piv == n) return std::nullopt;
    std::vector<fp_t> x(n, 0);
    const auto& rows = ech.rows();
    const auto& pivs = ech.pivot_cols();
    for (size_t i = rows.size(); i-- > 0;) {
        const auto& r = rows[i];
        fp_t s = r[n];
        for (size_t j = pivs[i] + 1; j < n; ++j)
            if (r[j] && x[j]) s = m.field().sub(s, m.field().mul(r[j], x[j]));
        x[pivs[i]] = s;
    }
    return x;
}

std::vector<std::vector<fp_t>> kernel_basis(const FpMatrix& m) {
    RowEchelon ech(m.field(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        ech.insert(std::vector<fp_t>(m.row(r), m.row(r) + m.cols()));
    return ech.kernel_basis();
}

}  // namespace frobsig

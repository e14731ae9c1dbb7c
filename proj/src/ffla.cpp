#include "toric/ffla.hpp"

#include <algorithm>

namespace toric {

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
    FqMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    FqMatrix m(std::move(field), rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw LengthMismatch("ragged row list");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

RrefResult rref(const FqMatrix& M) {
    const Field& f = *M.field();
    FqMatrix R = M;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row

    for (std::size_t col = 0; col < R.cols() && pr < R.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < R.rows() && R(sel, col) == 0) ++sel;
        if (sel == R.rows()) continue;

        if (sel != pr)
            std::swap_ranges(R.row(sel).begin(), R.row(sel).end(), R.row(pr).begin());

        const std::uint32_t pivinv = f.inv(R(pr, col));
        for (std::size_t j = col; j < R.cols(); ++j) R(pr, j) = f.mul(R(pr, j), pivinv);

        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (i == pr) continue;
            const std::uint32_t c = R(i, col);
            if (c == 0) continue;
            R(i, col) = 0;
            for (std::size_t j = col + 1; j < R.cols(); ++j)
                R(i, j) = f.sub(R(i, j), f.mul(c, R(pr, j)));
        }
        pivots.push_back(col);
        ++pr;
    }
    return {std::move(R), std::move(pivots)};
}

std::size_t rank(const FqMatrix& M) { return rref(M).pivots.size(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(const FqMatrix& M) {
    const auto [R, pivots] = rref(M);
    const Field& f = *M.field();
    const std::size_t n = M.cols();

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(R(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Solution> solve(const FqMatrix& M, std::span<const std::uint32_t> b) {
    if (b.size() != M.rows()) throw LengthMismatch("rhs length differs from row count");

    FqMatrix aug(M.field(), M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        std::copy(M.row(i).begin(), M.row(i).end(), aug.row(i).begin());
        aug(i, M.cols()) = b[i];
    }

    const auto [R, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == M.cols()) return std::nullopt;  // 0 = 1 row

    std::vector<std::uint32_t> x(M.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R(i, M.cols());
    return Solution{std::move(x), M.cols() - pivots.size()};
}

FqMatrix transpose(const FqMatrix& M) {
    FqMatrix T(M.field(), M.cols(), M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) T(j, i) = M(i, j);
    return T;
}

FqMatrix matmul(const FqMatrix& A, const FqMatrix& B) {
    if (A.field().get() != B.field().get()) throw FieldMismatch("matmul across fields");
    if (A.cols() != B.rows()) throw LengthMismatch("matmul dimension mismatch");
    const Field& f = *A.field();
    FqMatrix C(A.field(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const std::uint32_t a = A(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C(i, j) = f.add(C(i, j), f.mul(a, B(k, j)));
        }
    return C;
}

std::vector<std::uint32_t> vec_mat(std::span<const std::uint32_t> v, const FqMatrix& M) {
    if (v.size() != M.rows()) throw LengthMismatch("vector length differs from row count");
    const Field& f = *M.field();
    std::vector<std::uint32_t> out(M.cols(), 0);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        const std::uint32_t c = v[i];
        if (c == 0) continue;
        const auto r = M.row(i);
        for (std::size_t j = 0; j < M.cols(); ++j) out[j] = f.add(out[j], f.mul(c, r[j]));
    }
    return out;
}

FqMatrix stack(const FqMatrix& A, const FqMatrix& B) {
    if (A.field().get() != B.field().get()) throw FieldMismatch("stack across fields");
    if (A.cols() != B.cols()) throw LengthMismatch("stack with different column counts");
    FqMatrix S(A.field(), A.rows() + B.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        std::copy(A.row(i).begin(), A.row(i).end(), S.row(i).begin());
    for (std::size_t i = 0; i < B.rows(); ++i)
        std::copy(B.row(i).begin(), B.row(i).end(), S.row(A.rows() + i).begin());
    return S;
}

}  // namespace toric

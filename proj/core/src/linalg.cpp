#include "ainf/linalg.hpp"

#include "ainf/error.hpp"

namespace ainf {

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pr = row;
        while (pr < rows_ && sgn((*this)(pr, col)) == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(pr, c), (*this)(row, c));
        Scalar inv = 1 / (*this)(row, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || sgn((*this)(r, col)) == 0) continue;
            Scalar f = (*this)(r, col);
            for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> x(cols_);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw MalformedInput("solve: right-hand side has wrong length");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw InvalidInput("singular matrix");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

std::vector<Scalar> Matrix::multiply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
}

Vector EchelonBasis::reduce(Vector v) const {
    // Rows are kept fully reduced against each other, so one forward pass suffices.
    for (const auto& [pivot, row] : rows_) {
        Scalar c = v.coeff(pivot);
        if (sgn(c) != 0) v.axpy(-c, row);
    }
    return v;
}

bool EchelonBasis::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool EchelonBasis::insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.is_zero()) return false;
    BasisIndex pivot = r.begin()->first;
    r *= 1 / r.begin()->second;
    for (auto& [p, row] : rows_) {
        Scalar c = row.coeff(pivot);
        if (sgn(c) != 0) row.axpy(-c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<BasisIndex> EchelonBasis::pivots() const {
    std::vector<BasisIndex> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
}

Matrix degree_block(const GradedLinearMap& L, int from) {
    const auto& src = L.source()->in_degree(from);
    const auto& tgt = L.target()->in_degree(from + L.shift());
    std::map<BasisIndex, std::size_t> row_of;
    for (std::size_t r = 0; r < tgt.size(); ++r) row_of[tgt[r]] = r;
    Matrix m(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [j, x] : L.column(src[c])) m(row_of.at(j), c) = x;
    return m;
}

std::optional<Vector> solve_linear(const GradedLinearMap& L, const Vector& target) {
    if (target.is_zero()) return Vector{};
    for (const auto& [j, c] : target)
        if (j < 0 || static_cast<std::size_t>(j) >= L.target()->dim())
            throw MalformedInput("solve_linear: target has labels outside the target space");
    auto deg = target.degree_in(*L.target());
    if (!deg) throw MalformedInput("solve_linear: target is not homogeneous");
    int from = *deg - L.shift();
    const auto& src = L.source()->in_degree(from);
    const auto& tgt = L.target()->in_degree(*deg);
    Matrix m = degree_block(L, from);
    std::vector<Scalar> b(tgt.size());
    for (std::size_t r = 0; r < tgt.size(); ++r) b[r] = target.coeff(tgt[r]);
    auto x = m.solve(b);
    if (!x) return std::nullopt;
    Vector out;
    for (std::size_t c = 0; c < src.size(); ++c) out.add_term(src[c], (*x)[c]);
    return out;
}

std::map<int, std::size_t> ranks_by_degree(const GradedLinearMap& L) {
    std::map<int, std::size_t> out;
    for (int d : L.source()->degrees()) out[d] = degree_block(L, d).rank();
    return out;
}

}  // namespace ainf

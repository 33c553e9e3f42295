#include "thetaquartic/symplectic.hpp"

#include <sstream>

namespace thetaquartic {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_ * cols_));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw Error(ErrorCode::InvalidArgument, "ragged integer matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(int row, int col, int rows, int cols) const {
    IntMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = (*this)(row + i, col + j);
    return out;
}

void IntMatrix::set_block(int row, int col, const IntMatrix& src) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) (*this)(row + i, col + j) = src(i, j);
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Integer IntMatrix::max_abs() const {
    Integer best = 0;
    for (const auto& v : data_) best = std::max(best, Integer(abs(v)));
    return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::InvalidArgument, "matrix sum shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix out = a;
    for (auto& v : out.data_) v = -v;
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix standard_form(int genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (int i = 0; i < genus; ++i) {
        j(i, genus + i) = -1;
        j(genus + i, i) = 1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& gamma) {
    if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0 || gamma.rows() == 0) return false;
    const IntMatrix j = standard_form(gamma.rows() / 2);
    return gamma.transpose() * j * gamma == j;
}

bool is_in_level(const IntMatrix& gamma, long n) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "level must be positive");
    if (gamma.rows() != gamma.cols()) return false;
    for (int i = 0; i < gamma.rows(); ++i)
        for (int k = 0; k < gamma.cols(); ++k) {
            Integer r = (gamma(i, k) - (i == k ? 1 : 0)) % n;
            if (r != 0) return false;
        }
    return true;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : m_(std::move(m)), genus_(m_.rows() / 2) {
    if (!is_symplectic(m_))
        throw Error(ErrorCode::NotSymplectic, "matrix is not integral symplectic: " + m_.to_string());
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m, Unchecked) : m_(std::move(m)), genus_(m_.rows() / 2) {}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
    return SymplecticMatrix(IntMatrix::identity(2 * genus), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::standard_j(int genus) {
    return SymplecticMatrix(standard_form(genus), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::translation(const IntMatrix& b) {
    if (!b.is_symmetric()) throw Error(ErrorCode::NotSymplectic, "translation block must be symmetric");
    IntMatrix m = IntMatrix::identity(2 * b.rows());
    m.set_block(0, b.rows(), b);
    return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::lower_translation(const IntMatrix& c) {
    if (!c.is_symmetric()) throw Error(ErrorCode::NotSymplectic, "translation block must be symmetric");
    IntMatrix m = IntMatrix::identity(2 * c.rows());
    m.set_block(c.rows(), 0, c);
    return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::block_diagonal(const IntMatrix& a, const IntMatrix& a_inverse) {
    const int g = a.rows();
    if (a * a_inverse != IntMatrix::identity(g))
        throw Error(ErrorCode::NotSymplectic, "block_diagonal: inverse does not match");
    IntMatrix m(2 * g, 2 * g);
    m.set_block(0, 0, a);
    m.set_block(g, g, a_inverse.transpose());
    return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    IntMatrix m(2 * genus_, 2 * genus_);
    m.set_block(0, 0, d().transpose());
    m.set_block(0, genus_, -b().transpose());
    m.set_block(genus_, 0, -c().transpose());
    m.set_block(genus_, genus_, a().transpose());
    return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
    if (x.genus_ != y.genus_) throw Error(ErrorCode::GenusMismatch, "symplectic product genus mismatch");
    return SymplecticMatrix(x.m_ * y.m_, SymplecticMatrix::Unchecked{});
}

}  // namespace thetaquartic

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetaquartic/error.hpp"

namespace thetaquartic {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix with exact entries. Entries of long modular-group words
// grow without bound, so nothing here is allowed to overflow.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Integer& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i * cols_ + j)];
    }

    IntMatrix transpose() const;
    IntMatrix block(int row, int col, int rows, int cols) const;
    void set_block(int row, int col, const IntMatrix& src);
    bool is_symmetric() const;
    Integer max_abs() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

// J = [[0, -1], [1, 0]] in g x g blocks.
IntMatrix standard_form(int genus);

// gamma^T J gamma == J, exactly.
bool is_symplectic(const IntMatrix& gamma);

// gamma == 1 (mod n), exactly. Every integer matrix is in level 1.
bool is_in_level(const IntMatrix& gamma, long n);

// An element of Sp(2g, Z) in block form [[a, b], [c, d]].
class SymplecticMatrix {
public:
    // Throws NotSymplectic.
    explicit SymplecticMatrix(IntMatrix m);

    static SymplecticMatrix identity(int genus);
    static SymplecticMatrix standard_j(int genus);
    // [[1, B], [0, 1]] for symmetric integer B.
    static SymplecticMatrix translation(const IntMatrix& b);
    // [[1, 0], [C, 1]] for symmetric integer C.
    static SymplecticMatrix lower_translation(const IntMatrix& c);
    // [[A, 0], [0, A^{-T}]] for A in GL(g, Z); takes both A and its inverse.
    static SymplecticMatrix block_diagonal(const IntMatrix& a, const IntMatrix& a_inverse);

    int genus() const noexcept { return genus_; }
    const IntMatrix& matrix() const noexcept { return m_; }
    IntMatrix a() const { return m_.block(0, 0, genus_, genus_); }
    IntMatrix b() const { return m_.block(0, genus_, genus_, genus_); }
    IntMatrix c() const { return m_.block(genus_, 0, genus_, genus_); }
    IntMatrix d() const { return m_.block(genus_, genus_, genus_, genus_); }

    // gamma^{-1} = [[d^T, -b^T], [-c^T, a^T]].
    SymplecticMatrix inverse() const;

    friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y);
    friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

private:
    struct Unchecked {};
    SymplecticMatrix(IntMatrix m, Unchecked);

    IntMatrix m_;
    int genus_ = 0;
};

}  // namespace thetaquartic

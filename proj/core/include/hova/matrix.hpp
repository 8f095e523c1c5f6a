/* Dense matrices and coordinate vectors over the exact Scalar field. */

#pragma once

#include "hova/scalar.hpp"

#include <cstddef>
#include <vector>

namespace hova {

using Vec = std::vector<Scalar>;

struct MatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat column(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);
    void set_col(std::size_t c, const Vec& v);

    Mat transpose() const;

    Mat& operator+=(const Mat& rhs);
    Mat& operator-=(const Mat& rhs);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& s, Mat a);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Vec apply(const Vec& v) const;  // matrix * column vector

    bool is_zero() const;

    /// Row-major flattening.
    Vec vectorized() const { return data_; }

  private:
    std::size_t rows_, cols_;
    Vec data_;
};

/// Kronecker product; blocks of b scaled by entries of a.
Mat kron(const Mat& a, const Mat& b);

// Vector helpers.
Vec vec_zero(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
void vec_add_scaled(Vec& dst, const Scalar& c, const Vec& src);
Vec vec_scaled(const Vec& v, const Scalar& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

}  // namespace hova

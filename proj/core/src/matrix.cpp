#include "hova/matrix.hpp"

namespace hova {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw MatError("ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::column(const Vec& v) {
    Mat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Vec Mat::row(std::size_t r) const {
    Vec out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

Vec Mat::col(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void Mat::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw MatError("row size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Mat::set_col(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw MatError("column size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Mat& Mat::operator+=(const Mat& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw MatError("shape mismatch in add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw MatError("shape mismatch in sub");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw MatError("shape mismatch in mul");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Mat operator*(const Scalar& s, Mat a) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) *= s;
    return a;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw MatError("shape mismatch in apply");
    Vec out(rows_, Scalar::zero());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& m = at(r, c);
            if (m.is_zero() || v[c].is_zero()) continue;
            out[r] += m * v[c];
        }
    }
    return out;
}

bool Mat::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Scalar& s = a.at(ar, ac);
            if (s.is_zero()) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    if (b.at(br, bc).is_zero()) continue;
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = s * b.at(br, bc);
                }
        }
    return out;
}

Vec vec_zero(std::size_t n) { return Vec(n, Scalar::zero()); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar::zero());
    v[i] = Scalar::one();
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void vec_add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
    if (dst.size() != src.size()) throw MatError("vector size mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (src[i].is_zero()) continue;
        dst[i] += c * src[i];
    }
}

Vec vec_scaled(const Vec& v, const Scalar& c) {
    Vec out(v.size(), Scalar::zero());
    vec_add_scaled(out, c, v);
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MatError("vector size mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MatError("vector size mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MatError("vector size mismatch");
    Scalar out = Scalar::zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        out += a[i] * b[i];
    }
    return out;
}

}  // namespace hova

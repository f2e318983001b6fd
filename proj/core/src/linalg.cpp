#include "postlie/linalg.hpp"

namespace postlie {

Mat mat_identity(const FieldDesc& F, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

Mat mat_mul(const FieldDesc& F, const Mat& a, const Mat& b) {
    Mat out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Scalar& aik = a.at(i, k);
            if (F.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return out;
}

Vec mat_apply(const FieldDesc& F, const Mat& a, const Vec& v) {
    Vec out(a.rows, F.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            out[i] = F.add(out[i], F.mul(a.at(i, j), v[j]));
    return out;
}

std::size_t rref(const FieldDesc& F, Mat& m) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows && F.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(lead, j), m.at(pivot, j));
        const Scalar inv = F.inv(m.at(lead, col));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(lead, j) = F.mul(inv, m.at(lead, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == lead || F.is_zero(m.at(i, col))) continue;
            const Scalar factor = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(lead, j)));
        }
        ++lead;
    }
    return lead;
}

std::size_t rank(const FieldDesc& F, Mat m) { return rref(F, m); }

std::optional<Vec> solve(const FieldDesc& F, const Mat& a, const Vec& b) {
    // Gaussian elimination on the augmented matrix.
    Mat aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    rref(F, aug);
    Vec x(a.cols, F.zero());
    for (std::size_t i = 0; i < aug.rows; ++i) {
        std::size_t first = 0;
        while (first < aug.cols && F.is_zero(aug.at(i, first))) ++first;
        if (first == aug.cols) continue;       // zero row
        if (first == a.cols) return std::nullopt;  // 0 = nonzero
        x[first] = aug.at(i, a.cols);
    }
    return x;
}

bool in_row_span(const FieldDesc& F, const Mat& m, const Vec& v) {
    Mat with(m.rows + 1, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) with.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < m.cols; ++j) with.at(m.rows, j) = v[j];
    return rank(F, m) == rank(F, with);
}

Vec vec_add(const FieldDesc& F, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
    return out;
}

Vec vec_sub(const FieldDesc& F, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return out;
}

Vec vec_scale(const FieldDesc& F, const Scalar& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& s : a)
        if (s != Scalar{}) return false;
    return true;
}

}  // namespace postlie

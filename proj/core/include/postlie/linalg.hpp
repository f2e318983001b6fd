#pragma once

// Dense linear algebra over a finite field: just enough for membership tests
// in spans (derived series, centers) and for solving small linear systems.

#include <cstddef>
#include <optional>
#include <vector>

#include "postlie/scalars.hpp"

namespace postlie {

using Vec = std::vector<Scalar>;

struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> data;  // row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

Mat mat_identity(const FieldDesc& F, std::size_t n);
Mat mat_mul(const FieldDesc& F, const Mat& a, const Mat& b);
Vec mat_apply(const FieldDesc& F, const Mat& a, const Vec& v);

// In-place reduced row echelon form; returns the rank.
std::size_t rref(const FieldDesc& F, Mat& m);

std::size_t rank(const FieldDesc& F, Mat m);

// Solve a * x = b for one solution, or nullopt if inconsistent.
std::optional<Vec> solve(const FieldDesc& F, const Mat& a, const Vec& b);

// Is v in the row span of m?
bool in_row_span(const FieldDesc& F, const Mat& m, const Vec& v);

Vec vec_add(const FieldDesc& F, const Vec& a, const Vec& b);
Vec vec_sub(const FieldDesc& F, const Vec& a, const Vec& b);
Vec vec_scale(const FieldDesc& F, const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

}  // namespace postlie

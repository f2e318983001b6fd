#pragma once

// Finite-dimensional algebras given by structure constants: a bracket table,
// an optional p-map on the basis, and an optional post-Lie product table.
// Evaluators extend the tables to arbitrary elements (the p-map via the
// standard base-change identities), and the check_* family verifies each
// defining identity exactly, reporting witnesses on failure.
//
// Multilinear identities are checked on basis tuples (sufficient by
// linearity); identities involving a p-map or p-fold repetition of one
// argument are additionally checked on seeded random element tuples.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "postlie/linalg.hpp"
#include "postlie/pstruct.hpp"
#include "postlie/report.hpp"
#include "postlie/scalars.hpp"

namespace postlie {

struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct MissingTableError : std::invalid_argument {
    explicit MissingTableError(const std::string& what) : std::invalid_argument(what) {}
};

struct FdAlgebra {
    FieldDesc field;
    std::size_t dim = 0;
    std::vector<std::string> basis;                         // names, size dim
    std::vector<std::vector<Vec>> bracket;                  // [i][j] -> coordinates
    std::optional<std::vector<Vec>> pmap_basis;             // [i] -> coordinates
    std::optional<std::vector<std::vector<Vec>>> postlie;   // [i][j] -> coordinates

    Vec zero() const { return Vec(dim, Scalar{}); }
    Vec e(std::size_t i) const;
};

using PMapFn = std::function<Vec(const Vec&)>;

Vec eval_bracket(const FdAlgebra& A, const Vec& x, const Vec& y);
Vec eval_triangle(const FdAlgebra& A, const Vec& x, const Vec& y);
// p-map on arbitrary elements, extended from the basis values through the
// base-change identities (coefficients extracted from a formal polynomial).
Vec eval_pmap(const FdAlgebra& A, const Vec& x);

// Matrix of ad_x (resp. of x |> -) acting on coordinates.
Mat ad_matrix(const FdAlgebra& A, const Vec& x);
Mat triangle_matrix(const FdAlgebra& A, const Vec& x);

// The universal bracket sum appearing in the base-change identity for
// (x+y)^[p], computed directly from its defining formula with an arbitrary
// bracket; an independent oracle for eval_pmap.
Vec jacobson_bracket_sum(const FieldDesc& F, std::size_t dim,
                         const std::function<Vec(const Vec&, const Vec&)>& bracket,
                         const Vec& x, const Vec& y);

// Derived algebra: bracket [x,y] + x|>y - y|>x, p-map from the composition
// formula applied to the basis.
FdAlgebra sub_adjacent(const FdAlgebra& A);

// pstruct context over a finite-dimensional algebra.
struct FdContext {
    using Elem = Vec;

    const FdAlgebra* A;

    const FieldDesc& field() const { return A->field; }
    Elem zero() const { return A->zero(); }
    Elem add(const Elem& a, const Elem& b) const { return vec_add(A->field, a, b); }
    Elem scale(const Scalar& c, const Elem& a) const { return vec_scale(A->field, c, a); }
    Elem bracket(const Elem& a, const Elem& b) const { return eval_bracket(*A, a, b); }
    Elem triangle(const Elem& a, const Elem& b) const { return eval_triangle(*A, a, b); }
    Elem pmap(const Elem& x) const { return eval_pmap(*A, x); }
};

// Checkers.  Each returns a CheckReport; nothing throws on mathematical
// failure (throws are reserved for malformed inputs).

CheckReport check_lie(const FdAlgebra& A);
CheckReport check_restricted(const FdAlgebra& A, std::uint64_t seed,
                             const PMapFn& pmap = nullptr, int samples = 200);
CheckReport check_postlie(const FdAlgebra& A);
CheckReport check_trivially_restricted(const FdAlgebra& A, std::uint64_t seed,
                                       int samples = 200);
// p = 2 / p = 3 rewritten forms of the two defining identities; shares the
// prerequisite items and the sample stream with the generic checker.
CheckReport check_trivially_restricted_specialized(const FdAlgebra& A, std::uint64_t seed,
                                                   int samples = 200);
// The six-item definition; pmap_star defaults to the composition formula.
CheckReport check_restricted_postlie(const FdAlgebra& A, std::uint64_t seed,
                                     const PMapFn& pmap_star = nullptr,
                                     const PMapFn& pmap = nullptr, int samples = 200);
// Builds the derived algebra, verifies it is restricted Lie, and verifies
// x |> - is a restricted representation of it.
CheckReport sub_adjacent_restricted_check(const FdAlgebra& A, std::uint64_t seed,
                                          int samples = 200);

CheckReport check_restricted_derivation(const FdAlgebra& A, const Mat& d, std::uint64_t seed,
                                        int samples = 200);
CheckReport check_restricted_morphism(const FdAlgebra& src, const FdAlgebra& dst,
                                      const Mat& phi, std::uint64_t seed, int samples = 200);

struct LieModuleDesc {
    FdAlgebra acting;                      // the algebra acting
    FdAlgebra acted;                       // the algebra acted on
    std::vector<std::vector<Vec>> action;  // [i][j]: acting e_i applied to acted e_j
};

CheckReport check_restricted_module(const LieModuleDesc& desc, std::uint64_t seed,
                                    int samples = 200);
// theta: acted -> acting, as a matrix.
CheckReport check_o_operator(const LieModuleDesc& desc, const Mat& theta);
CheckReport check_rota_baxter(const FdAlgebra& A, const Mat& R);
FdAlgebra induced_postlie(const LieModuleDesc& desc, const Mat& theta);
CheckReport check_trivially_restricted_o_operator(const LieModuleDesc& desc, const Mat& theta,
                                                  std::uint64_t seed, int samples = 200);

// (x_1 ... x_n) |> y through the envelope recursion; the empty word acts as
// the identity.
Vec env_action(const FdAlgebra& A, const std::vector<Vec>& word, const Vec& y);
// D(x) = (p-fold word action of x) minus the action of the composed p-map;
// verifies it derives |> and that D(x), D(y) commute, on the given triple.
CheckReport D_check(const FdAlgebra& A, const Vec& x, const Vec& y, const Vec& z);
// Is v in the k-th term of the lower central series (Z_1 = g)?
bool lcs_membership(const FdAlgebra& A, const Vec& v, int k);

// Seeded sampling helpers shared by checkers and tests.
Vec random_element(const FdAlgebra& A, std::uint64_t& state);
Scalar random_scalar(const FieldDesc& F, std::uint64_t& state);

std::string format_element(const FdAlgebra& A, const Vec& v);

}  // namespace postlie

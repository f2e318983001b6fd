#include "postlie/fdalgebra.hpp"

#include <sstream>

namespace postlie {

namespace {

// splitmix64: deterministic, platform-independent sample stream.
std::uint64_t next_u64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void require_dim(const FdAlgebra& A, const Vec& x, const char* op) {
    if (x.size() != A.dim)
        throw DimensionMismatchError(std::string(op) + ": element length " +
                                     std::to_string(x.size()) + " != dim " +
                                     std::to_string(A.dim));
}

std::string vec_str(const FieldDesc& F, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += F.to_string(v[i]);
    }
    return s + ")";
}

std::string pair_witness(const FdAlgebra& A, const Vec& x, const Vec& y, const Vec& lhs,
                         const Vec& rhs) {
    return "x=" + vec_str(A.field, x) + " y=" + vec_str(A.field, y) +
           " lhs=" + vec_str(A.field, lhs) + " rhs=" + vec_str(A.field, rhs);
}

// Bilinear extension of a basis-pair table.
Vec eval_table(const FdAlgebra& A, const std::vector<std::vector<Vec>>& table, const Vec& x,
               const Vec& y) {
    const FieldDesc& F = A.field;
    Vec out = A.zero();
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (F.is_zero(x[i])) continue;
        for (std::size_t j = 0; j < A.dim; ++j) {
            if (F.is_zero(y[j])) continue;
            Scalar c = F.mul(x[i], y[j]);
            const Vec& t = table[i][j];
            for (std::size_t k = 0; k < A.dim; ++k)
                out[k] = F.add(out[k], F.mul(c, t[k]));
        }
    }
    return out;
}

// Sum of the base-change correction terms s_i(a, b), i = 1..p-1, where i*s_i
// is the lambda^(i-1) coefficient of (ad_{lambda a + b})^(p-1)(a).  The
// polynomial is carried as a coefficient list of element vectors.
Vec s_sum(const FdAlgebra& A, const Vec& a, const Vec& b) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    std::vector<Vec> poly{a};  // degree 0
    for (int step = 0; step < p - 1; ++step) {
        std::vector<Vec> next(poly.size() + 1, A.zero());
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] = vec_add(F, next[d], eval_bracket(A, b, poly[d]));
            next[d + 1] = vec_add(F, next[d + 1], eval_bracket(A, a, poly[d]));
        }
        poly = std::move(next);
    }
    Vec out = A.zero();
    for (int i = 1; i <= p - 1; ++i)
        out = vec_add(F, out, vec_scale(F, F.inv(F.from_int(i)), poly[i - 1]));
    return out;
}

Mat mat_pow(const FieldDesc& F, const Mat& M, int e) {
    Mat out = mat_identity(F, M.rows);
    for (int i = 0; i < e; ++i) out = mat_mul(F, out, M);
    return out;
}

bool mat_eq(const Mat& a, const Mat& b) { return a.rows == b.rows && a.cols == b.cols && a.data == b.data; }

Vec pfold_triangle(const FdAlgebra& A, const Vec& x, const Vec& y, int times) {
    Vec out = y;
    for (int i = 0; i < times; ++i) out = eval_triangle(A, x, out);
    return out;
}

Vec apply_pmap(const FdAlgebra& A, const PMapFn& fn, const Vec& x) {
    return fn ? fn(x) : eval_pmap(A, x);
}

}  // namespace

Vec FdAlgebra::e(std::size_t i) const {
    Vec v = zero();
    v.at(i) = field.one();
    return v;
}

Vec eval_bracket(const FdAlgebra& A, const Vec& x, const Vec& y) {
    require_dim(A, x, "eval_bracket");
    require_dim(A, y, "eval_bracket");
    return eval_table(A, A.bracket, x, y);
}

Vec eval_triangle(const FdAlgebra& A, const Vec& x, const Vec& y) {
    require_dim(A, x, "eval_triangle");
    require_dim(A, y, "eval_triangle");
    if (!A.postlie) throw MissingTableError("eval_triangle: no post-Lie table");
    return eval_table(A, *A.postlie, x, y);
}

Vec eval_pmap(const FdAlgebra& A, const Vec& x) {
    require_dim(A, x, "eval_pmap");
    if (!A.pmap_basis) throw MissingTableError("eval_pmap: no p-map table");
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    // Top nonzero coordinate; split it off and recurse on the rest.
    std::size_t top = A.dim;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < A.dim; ++i)
        if (!F.is_zero(x[i])) {
            top = i;
            ++nonzero;
        }
    if (nonzero == 0) return A.zero();
    Scalar cp = F.pow(x[top], p);
    Vec head = vec_scale(F, cp, (*A.pmap_basis)[top]);
    if (nonzero == 1) return head;
    Vec rest = x;
    rest[top] = Scalar{};
    Vec b = A.zero();
    b[top] = x[top];
    Vec out = vec_add(F, eval_pmap(A, rest), head);
    return vec_add(F, out, s_sum(A, rest, b));
}

Mat ad_matrix(const FdAlgebra& A, const Vec& x) {
    Mat M(A.dim, A.dim);
    for (std::size_t j = 0; j < A.dim; ++j) {
        Vec col = eval_bracket(A, x, A.e(j));
        for (std::size_t i = 0; i < A.dim; ++i) M.at(i, j) = col[i];
    }
    return M;
}

Mat triangle_matrix(const FdAlgebra& A, const Vec& x) {
    Mat M(A.dim, A.dim);
    for (std::size_t j = 0; j < A.dim; ++j) {
        Vec col = eval_triangle(A, x, A.e(j));
        for (std::size_t i = 0; i < A.dim; ++i) M.at(i, j) = col[i];
    }
    return M;
}

Vec jacobson_bracket_sum(const FieldDesc& F, std::size_t dim,
                         const std::function<Vec(const Vec&, const Vec&)>& bracket,
                         const Vec& x, const Vec& y) {
    const int p = F.characteristic();
    Vec out(dim, Scalar{});
    if (p < 2) return out;
    // Sum over words (w_1, ..., w_p) in {x, y} with w_{p-1} = y and w_p = x of
    // (1 / #x) [w_1, [w_2, [..., [w_{p-1}, w_p] ...]]].
    const int free_slots = p - 2;
    for (std::uint64_t mask = 0; mask < (1ULL << free_slots); ++mask) {
        int count_x = 1;  // w_p = x
        Vec term = bracket(y, x);
        for (int k = free_slots - 1; k >= 0; --k) {
            bool is_x = (mask >> k) & 1;
            if (is_x) ++count_x;
            term = bracket(is_x ? x : y, term);
        }
        Scalar c = F.inv(F.from_int(count_x));
        for (std::size_t i = 0; i < dim; ++i) out[i] = F.add(out[i], F.mul(c, term[i]));
    }
    return out;
}

FdAlgebra sub_adjacent(const FdAlgebra& A) {
    if (!A.postlie) throw MissingTableError("sub_adjacent: no post-Lie table");
    if (!A.pmap_basis) throw MissingTableError("sub_adjacent: no p-map table");
    const FieldDesc& F = A.field;
    FdAlgebra B;
    B.field = F;
    B.dim = A.dim;
    B.basis = A.basis;
    B.bracket.assign(A.dim, std::vector<Vec>(A.dim, B.zero()));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec v = vec_add(F, A.bracket[i][j], (*A.postlie)[i][j]);
            B.bracket[i][j] = vec_sub(F, v, (*A.postlie)[j][i]);
        }
    FdContext ctx{&A};
    std::vector<Vec> pm;
    pm.reserve(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) pm.push_back(sub_adjacent_pmap(ctx, A.e(i)));
    B.pmap_basis = std::move(pm);
    return B;
}

Scalar random_scalar(const FieldDesc& F, std::uint64_t& state) {
    auto elems = F.order();
    return F.from_int(static_cast<long long>(next_u64(state) % elems));
}

Vec random_element(const FdAlgebra& A, std::uint64_t& state) {
    Vec v = A.zero();
    for (std::size_t i = 0; i < A.dim; ++i) {
        // from_int maps through repeated addition of 1, which only reaches the
        // prime subfield; draw extension coordinates directly.
        Scalar s{};
        for (int d = 0; d < A.field.degree(); ++d)
            s.c[static_cast<std::size_t>(d)] =
                static_cast<std::uint32_t>(next_u64(state) % static_cast<std::uint64_t>(A.field.characteristic()));
        v[i] = s;
    }
    return v;
}

std::string format_element(const FdAlgebra& A, const Vec& v) { return vec_str(A.field, v); }

CheckReport check_lie(const FdAlgebra& A) {
    CheckReport rep;
    const FieldDesc& F = A.field;
    bool alt_ok = true, jac_ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.dim && alt_ok; ++i) {
        if (!vec_is_zero(A.bracket[i][i])) {
            alt_ok = false;
            wit = "[" + A.basis[i] + "," + A.basis[i] + "] != 0";
        }
        for (std::size_t j = 0; j < A.dim && alt_ok; ++j)
            if (!vec_is_zero(vec_add(F, A.bracket[i][j], A.bracket[j][i]))) {
                alt_ok = false;
                wit = "[" + A.basis[i] + "," + A.basis[j] + "] + [" + A.basis[j] + "," +
                      A.basis[i] + "] != 0";
            }
    }
    if (alt_ok)
        rep.add_pass("bracket alternating on basis");
    else
        rep.add_fail("bracket alternating on basis", wit);
    for (std::size_t i = 0; i < A.dim && jac_ok; ++i)
        for (std::size_t j = 0; j < A.dim && jac_ok; ++j)
            for (std::size_t k = 0; k < A.dim && jac_ok; ++k) {
                Vec s = eval_bracket(A, A.e(i), A.bracket[j][k]);
                s = vec_add(F, s, eval_bracket(A, A.e(j), A.bracket[k][i]));
                s = vec_add(F, s, eval_bracket(A, A.e(k), A.bracket[i][j]));
                if (!vec_is_zero(s)) {
                    jac_ok = false;
                    wit = "Jacobi fails at (" + A.basis[i] + "," + A.basis[j] + "," + A.basis[k] +
                          "): " + vec_str(F, s);
                }
            }
    if (jac_ok)
        rep.add_pass("Jacobi identity on basis triples");
    else
        rep.add_fail("Jacobi identity on basis triples", wit);
    return rep;
}

CheckReport check_restricted(const FdAlgebra& A, std::uint64_t seed, const PMapFn& pmap,
                             int samples) {
    CheckReport rep;
    rep.seed = seed;
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    if (!pmap && !A.pmap_basis) throw MissingTableError("check_restricted: no p-map");
    auto pm = [&](const Vec& v) { return apply_pmap(A, pmap, v); };

    // Basis criterion: ad_{e_i^[p]} = (ad_{e_i})^p.
    bool basis_ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.dim; ++i) {
        Mat lhs = ad_matrix(A, pm(A.e(i)));
        Mat rhs = mat_pow(F, ad_matrix(A, A.e(i)), p);
        if (!mat_eq(lhs, rhs)) {
            basis_ok = false;
            wit = "at basis element " + A.basis[i];
            break;
        }
    }
    if (basis_ok)
        rep.add_pass("ad_{e^[p]} = (ad_e)^p on basis");
    else
        rep.add_fail("ad_{e^[p]} = (ad_e)^p on basis", wit);

    std::uint64_t st = seed;
    bool semi_ok = true, ad_ok = true, sum_ok = true;
    std::string semi_w, ad_w, sum_w;
    auto br = [&](const Vec& a, const Vec& b) { return eval_bracket(A, a, b); };
    for (int t = 0; t < samples; ++t) {
        Vec x = random_element(A, st);
        Vec y = random_element(A, st);
        Scalar lam = random_scalar(F, st);
        if (semi_ok) {
            Vec lhs = pm(vec_scale(F, lam, x));
            Vec rhs = vec_scale(F, F.pow(lam, p), pm(x));
            if (lhs != rhs) {
                semi_ok = false;
                semi_w = pair_witness(A, x, x, lhs, rhs) + " lambda=" + F.to_string(lam);
            }
        }
        if (ad_ok) {
            Mat lhs = ad_matrix(A, pm(x));
            Mat rhs = mat_pow(F, ad_matrix(A, x), p);
            if (!mat_eq(lhs, rhs)) {
                ad_ok = false;
                ad_w = "x=" + vec_str(F, x);
            }
        }
        if (sum_ok) {
            Vec lhs = pm(vec_add(F, x, y));
            Vec rhs = vec_add(F, pm(x), pm(y));
            rhs = vec_add(F, rhs, jacobson_bracket_sum(F, A.dim, br, x, y));
            if (lhs != rhs) {
                sum_ok = false;
                sum_w = pair_witness(A, x, y, lhs, rhs);
            }
        }
    }
    if (semi_ok)
        rep.add_pass("(lambda x)^[p] = lambda^p x^[p] (random)");
    else
        rep.add_fail("(lambda x)^[p] = lambda^p x^[p] (random)", semi_w);
    if (ad_ok)
        rep.add_pass("ad_{x^[p]} = (ad_x)^p (random)");
    else
        rep.add_fail("ad_{x^[p]} = (ad_x)^p (random)", ad_w);
    if (sum_ok)
        rep.add_pass("(x+y)^[p] = x^[p] + y^[p] + sum s_i (explicit bracket-word sum, random)");
    else
        rep.add_fail("(x+y)^[p] = x^[p] + y^[p] + sum s_i (explicit bracket-word sum, random)",
                     sum_w);
    return rep;
}

CheckReport check_postlie(const FdAlgebra& A) {
    CheckReport rep;
    const FieldDesc& F = A.field;
    if (!A.postlie) throw MissingTableError("check_postlie: no post-Lie table");
    rep.merge(check_lie(A));
    auto assoc = [&](const Vec& x, const Vec& y, const Vec& z) {
        Vec a = eval_triangle(A, x, eval_triangle(A, y, z));
        return vec_sub(F, a, eval_triangle(A, eval_triangle(A, x, y), z));
    };
    bool ax1 = true, ax2 = true;
    std::string w1, w2;
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            for (std::size_t k = 0; k < A.dim; ++k) {
                Vec ei = A.e(i), ej = A.e(j), ek = A.e(k);
                if (ax1) {
                    Vec lhs = eval_triangle(A, ei, A.bracket[j][k]);
                    Vec rhs = vec_add(F, eval_bracket(A, eval_triangle(A, ei, ej), ek),
                                      eval_bracket(A, ej, eval_triangle(A, ei, ek)));
                    if (lhs != rhs)
                        ax1 = false,
                        w1 = "(" + A.basis[i] + "," + A.basis[j] + "," + A.basis[k] + ")";
                }
                if (ax2) {
                    Vec lhs = eval_triangle(A, A.bracket[i][j], ek);
                    Vec rhs = vec_sub(F, assoc(ei, ej, ek), assoc(ej, ei, ek));
                    if (lhs != rhs)
                        ax2 = false,
                        w2 = "(" + A.basis[i] + "," + A.basis[j] + "," + A.basis[k] + ")";
                }
            }
    if (ax1)
        rep.add_pass("x|>[y,z] = [x|>y,z] + [y,x|>z] on basis triples");
    else
        rep.add_fail("x|>[y,z] = [x|>y,z] + [y,x|>z] on basis triples", w1);
    if (ax2)
        rep.add_pass("[x,y]|>z = a(x,y,z) - a(y,x,z) on basis triples");
    else
        rep.add_fail("[x,y]|>z = a(x,y,z) - a(y,x,z) on basis triples", w2);
    return rep;
}

namespace {

// Shared random pair stream for the generic / specialized trivially-restricted
// checkers; both must sample identically so verdicts are comparable pairwise.
std::vector<std::pair<Vec, Vec>> sample_pairs(const FdAlgebra& A, std::uint64_t seed,
                                              int samples) {
    std::uint64_t st = seed;
    std::vector<std::pair<Vec, Vec>> out;
    out.reserve(static_cast<std::size_t>(samples) + A.dim * A.dim);
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) out.emplace_back(A.e(i), A.e(j));
    for (int t = 0; t < samples; ++t) {
        Vec x = random_element(A, st);
        Vec y = random_element(A, st);
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

CheckReport trivially_restricted_prereqs(const FdAlgebra& A, std::uint64_t seed) {
    CheckReport rep;
    rep.merge(check_postlie(A));
    rep.merge(check_restricted(A, seed ^ 0x5a5a5a5aULL));
    return rep;
}

}  // namespace

CheckReport check_trivially_restricted(const FdAlgebra& A, std::uint64_t seed, int samples) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    CheckReport rep = trivially_restricted_prereqs(A, seed);
    rep.seed = seed;
    FdContext ctx{&A};
    bool t1 = true, t2 = true;
    std::string w1, w2;
    for (const auto& [x, y] : sample_pairs(A, seed, samples)) {
        if (t1) {
            Vec lhs = eval_triangle(A, sub_adjacent_pmap(ctx, x), y);
            Vec rhs = pfold_triangle(A, x, y, p);
            if (lhs != rhs) t1 = false, w1 = pair_witness(A, x, y, lhs, rhs);
        }
        if (t2) {
            Vec lhs = eval_triangle(A, y, eval_pmap(A, x));
            Vec rhs = eval_triangle(A, y, x);
            for (int i = 0; i < p - 1; ++i) rhs = eval_bracket(A, x, rhs);
            if (lhs != rhs) t2 = false, w2 = pair_witness(A, x, y, lhs, rhs);
        }
    }
    if (t1)
        rep.add_pass("x^[p]|> |> y = p-fold x|>(...(x|>y))");
    else
        rep.add_fail("x^[p]|> |> y = p-fold x|>(...(x|>y))", w1);
    if (t2)
        rep.add_pass("y|>x^[p] = ad_x^{p-1}(y|>x)");
    else
        rep.add_fail("y|>x^[p] = ad_x^{p-1}(y|>x)", w2);
    return rep;
}

CheckReport check_trivially_restricted_specialized(const FdAlgebra& A, std::uint64_t seed,
                                                   int samples) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    if (p != 2 && p != 3)
        throw std::invalid_argument(
            "check_trivially_restricted_specialized: rewritten forms exist for p = 2, 3 only");
    CheckReport rep = trivially_restricted_prereqs(A, seed);
    rep.seed = seed;
    auto tri = [&](const Vec& a, const Vec& b) { return eval_triangle(A, a, b); };
    bool d_ok = true, a_ok = true;
    std::string dw, aw;
    for (const auto& [x, y] : sample_pairs(A, seed, samples)) {
        Vec xp = eval_pmap(A, x);
        if (p == 2) {
            if (d_ok) {
                // x |> y^[2] = [x|>y, y]
                Vec lhs = tri(x, eval_pmap(A, y));
                Vec rhs = eval_bracket(A, tri(x, y), y);
                if (lhs != rhs) d_ok = false, dw = pair_witness(A, x, y, lhs, rhs);
            }
            if (a_ok) {
                // x^[2] |> y = x|>(x|>y) + (x|>x)|>y
                Vec lhs = tri(xp, y);
                Vec rhs = vec_add(F, tri(x, tri(x, y)), tri(tri(x, x), y));
                if (lhs != rhs) a_ok = false, aw = pair_witness(A, x, y, lhs, rhs);
            }
        } else {
            if (d_ok) {
                // x |> y^[3] = ad_y^2(x|>y)
                Vec lhs = tri(x, eval_pmap(A, y));
                Vec rhs = eval_bracket(A, y, eval_bracket(A, y, tri(x, y)));
                if (lhs != rhs) d_ok = false, dw = pair_witness(A, x, y, lhs, rhs);
            }
            if (a_ok) {
                // x^[3] |> y = x|>(x|>(x|>y)) + 2 (x|>x)|>(x|>y) + x|>((x|>x)|>y)
                //              + ((x|>x)|>x)|>y + (x|>(x|>x))|>y
                Vec xx = tri(x, x);
                Vec lhs = tri(xp, y);
                Vec rhs = tri(x, tri(x, tri(x, y)));
                rhs = vec_add(F, rhs, vec_scale(F, F.from_int(2), tri(xx, tri(x, y))));
                rhs = vec_add(F, rhs, tri(x, tri(xx, y)));
                rhs = vec_add(F, rhs, tri(tri(xx, x), y));
                rhs = vec_add(F, rhs, tri(tri(x, xx), y));
                if (lhs != rhs) a_ok = false, aw = pair_witness(A, x, y, lhs, rhs);
            }
        }
    }
    const char* dn = p == 2 ? "x|>y^[2] = [x|>y,y]" : "x|>y^[3] = ad_y^2(x|>y)";
    const char* an = p == 2 ? "x^[2]|>y = x|>(x|>y) + (x|>x)|>y"
                            : "x^[3]|>y = five-term |> expansion";
    if (d_ok)
        rep.add_pass(dn);
    else
        rep.add_fail(dn, dw);
    if (a_ok)
        rep.add_pass(an);
    else
        rep.add_fail(an, aw);
    return rep;
}

namespace {

// Context whose p-map may be an arbitrary (possibly non-tabulated) function.
struct FnContextImpl {
    using Elem = Vec;
    const FdAlgebra* A;
    const PMapFn* pm;

    const FieldDesc& field() const { return A->field; }
    Elem zero() const { return A->zero(); }
    Elem add(const Elem& a, const Elem& b) const { return vec_add(A->field, a, b); }
    Elem scale(const Scalar& c, const Elem& v) const { return vec_scale(A->field, c, v); }
    Elem bracket(const Elem& a, const Elem& b) const { return eval_bracket(*A, a, b); }
    Elem triangle(const Elem& a, const Elem& b) const { return eval_triangle(*A, a, b); }
    Elem pmap(const Elem& x) const { return apply_pmap(*A, *pm, x); }
};

}  // namespace

CheckReport check_restricted_postlie(const FdAlgebra& A, std::uint64_t seed,
                                     const PMapFn& pmap_star, const PMapFn& pmap, int samples) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    CheckReport rep;
    rep.seed = seed;
    FnContextImpl ctx{&A, &pmap};
    auto pm = [&](const Vec& v) { return apply_pmap(A, pmap, v); };
    auto pm_star = [&](const Vec& v) {
        return pmap_star ? pmap_star(v) : sub_adjacent_pmap(ctx, v);
    };
    auto sub_br = [&](const Vec& a, const Vec& b) {
        Vec v = vec_add(F, eval_bracket(A, a, b), eval_triangle(A, a, b));
        return vec_sub(F, v, eval_triangle(A, b, a));
    };

    // 1. post-Lie axioms; 2. (g, [-,-], (-)^[p]) restricted Lie.
    rep.merge(check_postlie(A));
    rep.merge(check_restricted(A, seed ^ 0x11111111ULL, pmap));

    bool star_semi = true, star_sum = true, it4 = true, it5a = true, it5b = true, it6 = true;
    std::string w_semi, w_sum, w4, w5a, w5b, w6;
    std::uint64_t st = seed;
    for (int t = 0; t < samples; ++t) {
        Vec x = random_element(A, st);
        Vec y = random_element(A, st);
        Scalar lam = random_scalar(F, st);
        Vec xps = pm_star(x);
        // 3. (-)^[p]|> is a p-map for the derived bracket.
        if (star_semi) {
            Vec lhs = pm_star(vec_scale(F, lam, x));
            Vec rhs = vec_scale(F, F.pow(lam, p), xps);
            if (lhs != rhs)
                star_semi = false,
                w_semi = pair_witness(A, x, x, lhs, rhs) + " lambda=" + F.to_string(lam);
        }
        if (star_sum) {
            Vec lhs = pm_star(vec_add(F, x, y));
            Vec rhs = vec_add(F, xps, pm_star(y));
            rhs = vec_add(F, rhs, jacobson_bracket_sum(F, A.dim, sub_br, x, y));
            if (lhs != rhs) star_sum = false, w_sum = pair_witness(A, x, y, lhs, rhs);
        }
        // 4. [x^[p]|>, y] + x^[p]|> |> y = y |> x^[p]|> + p-fold derived bracket.
        if (it4) {
            Vec lhs = vec_add(F, eval_bracket(A, xps, y), eval_triangle(A, xps, y));
            Vec rhs = eval_triangle(A, y, xps);
            Vec nested = y;
            for (int i = 0; i < p; ++i) nested = sub_br(x, nested);
            rhs = vec_add(F, rhs, nested);
            if (lhs != rhs) it4 = false, w4 = pair_witness(A, x, y, lhs, rhs);
        }
        // 5. x|>(-) is a restricted derivation of (g, [-,-], (-)^[p]).
        if (it5a) {
            Vec z = random_element(A, st);
            Vec lhs = eval_triangle(A, x, eval_bracket(A, y, z));
            Vec rhs = vec_add(F, eval_bracket(A, eval_triangle(A, x, y), z),
                              eval_bracket(A, y, eval_triangle(A, x, z)));
            if (lhs != rhs) it5a = false, w5a = pair_witness(A, x, y, lhs, rhs);
        } else {
            (void)random_element(A, st);
        }
        if (it5b) {
            Vec lhs = eval_triangle(A, x, pm(y));
            Vec rhs = eval_triangle(A, x, y);
            for (int i = 0; i < p - 1; ++i) rhs = eval_bracket(A, y, rhs);
            if (lhs != rhs) it5b = false, w5b = pair_witness(A, x, y, lhs, rhs);
        }
        // 6. x^[p]|> |> y = p-fold x|>(...(x|>y)).
        if (it6) {
            Vec lhs = eval_triangle(A, xps, y);
            Vec rhs = pfold_triangle(A, x, y, p);
            if (lhs != rhs) it6 = false, w6 = pair_witness(A, x, y, lhs, rhs);
        }
    }
    auto put = [&](bool ok, const char* name, const std::string& w) {
        if (ok)
            rep.add_pass(name);
        else
            rep.add_fail(name, w);
    };
    put(star_semi, "(lambda x)^[p]|> = lambda^p x^[p]|> (random)", w_semi);
    put(star_sum, "(x+y)^[p]|> Jacobson sum for the derived bracket (random)", w_sum);
    put(it4, "[x^[p]|>,y] + x^[p]|> |> y = y|>x^[p]|> + p-fold derived bracket", w4);
    put(it5a, "x|>(-) derives the bracket (random)", w5a);
    put(it5b, "x|>y^[p] = ad_y^{p-1}(x|>y) (random)", w5b);
    put(it6, "x^[p]|> |> y = p-fold x|>(...(x|>y)) (random)", w6);
    return rep;
}

CheckReport sub_adjacent_restricted_check(const FdAlgebra& A, std::uint64_t seed, int samples) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    CheckReport rep;
    rep.seed = seed;
    FdAlgebra B = sub_adjacent(A);
    rep.merge(check_lie(B));
    rep.merge(check_restricted(B, seed ^ 0x22222222ULL));

    // x |> (-) is a restricted representation of the derived algebra.
    bool rep_br = true, rep_pm = true;
    std::string wb, wp;
    std::uint64_t st = seed;
    for (int t = 0; t < samples; ++t) {
        Vec x = random_element(A, st);
        Vec y = random_element(A, st);
        Vec z = random_element(A, st);
        if (rep_br) {
            Vec lhs = eval_triangle(A, eval_bracket(B, x, y), z);
            Vec rhs = vec_sub(F, eval_triangle(A, x, eval_triangle(A, y, z)),
                              eval_triangle(A, y, eval_triangle(A, x, z)));
            if (lhs != rhs) rep_br = false, wb = pair_witness(A, x, y, lhs, rhs);
        }
        if (rep_pm) {
            Vec lhs = eval_triangle(A, eval_pmap(B, x), z);
            Vec rhs = pfold_triangle(A, x, z, p);
            if (lhs != rhs) rep_pm = false, wp = pair_witness(A, x, z, lhs, rhs);
        }
    }
    if (rep_br)
        rep.add_pass("|> represents the derived bracket (random)");
    else
        rep.add_fail("|> represents the derived bracket (random)", wb);
    if (rep_pm)
        rep.add_pass("|> respects the derived p-map (random)");
    else
        rep.add_fail("|> respects the derived p-map (random)", wp);
    return rep;
}

CheckReport check_restricted_derivation(const FdAlgebra& A, const Mat& d, std::uint64_t seed,
                                        int samples) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    if (d.rows != A.dim || d.cols != A.dim)
        throw DimensionMismatchError("check_restricted_derivation: matrix shape");
    CheckReport rep;
    rep.seed = seed;
    bool leib = true, pcond = true;
    std::string wl, wp;
    for (std::size_t i = 0; i < A.dim && leib; ++i)
        for (std::size_t j = 0; j < A.dim && leib; ++j) {
            Vec lhs = mat_apply(F, d, A.bracket[i][j]);
            Vec rhs = vec_add(F, eval_bracket(A, mat_apply(F, d, A.e(i)), A.e(j)),
                              eval_bracket(A, A.e(i), mat_apply(F, d, A.e(j))));
            if (lhs != rhs) leib = false, wl = "(" + A.basis[i] + "," + A.basis[j] + ")";
        }
    std::uint64_t st = seed;
    for (int t = 0; t < samples && pcond; ++t) {
        Vec x = random_element(A, st);
        Vec lhs = mat_apply(F, d, eval_pmap(A, x));
        Vec rhs = mat_apply(F, d, x);
        for (int i = 0; i < p - 1; ++i) rhs = eval_bracket(A, x, rhs);
        if (lhs != rhs) pcond = false, wp = pair_witness(A, x, x, lhs, rhs);
    }
    if (leib)
        rep.add_pass("d[x,y] = [dx,y] + [x,dy] on basis pairs");
    else
        rep.add_fail("d[x,y] = [dx,y] + [x,dy] on basis pairs", wl);
    if (pcond)
        rep.add_pass("d(x^[p]) = ad_x^{p-1}(dx) (random)");
    else
        rep.add_fail("d(x^[p]) = ad_x^{p-1}(dx) (random)", wp);
    return rep;
}

CheckReport check_restricted_morphism(const FdAlgebra& src, const FdAlgebra& dst, const Mat& phi,
                                      std::uint64_t seed, int samples) {
    const FieldDesc& F = src.field;
    if (phi.cols != src.dim || phi.rows != dst.dim)
        throw DimensionMismatchError("check_restricted_morphism: matrix shape");
    CheckReport rep;
    rep.seed = seed;
    bool br = true, pm = true;
    std::string wb, wp;
    for (std::size_t i = 0; i < src.dim && br; ++i)
        for (std::size_t j = 0; j < src.dim && br; ++j) {
            Vec lhs = mat_apply(F, phi, src.bracket[i][j]);
            Vec rhs =
                eval_bracket(dst, mat_apply(F, phi, src.e(i)), mat_apply(F, phi, src.e(j)));
            if (lhs != rhs) br = false, wb = "(" + src.basis[i] + "," + src.basis[j] + ")";
        }
    std::uint64_t st = seed;
    for (int t = 0; t < samples && pm; ++t) {
        Vec x = random_element(src, st);
        Vec lhs = mat_apply(F, phi, eval_pmap(src, x));
        Vec rhs = eval_pmap(dst, mat_apply(F, phi, x));
        if (lhs != rhs) pm = false, wp = "x=" + vec_str(F, x);
    }
    if (br)
        rep.add_pass("phi[x,y] = [phi x, phi y] on basis pairs");
    else
        rep.add_fail("phi[x,y] = [phi x, phi y] on basis pairs", wb);
    if (pm)
        rep.add_pass("phi(x^[p]) = (phi x)^[p] (random)");
    else
        rep.add_fail("phi(x^[p]) = (phi x)^[p] (random)", wp);
    return rep;
}

namespace {

Vec eval_action(const LieModuleDesc& D, const Vec& a, const Vec& m) {
    const FieldDesc& F = D.acting.field;
    Vec out(D.acted.dim, Scalar{});
    for (std::size_t i = 0; i < D.acting.dim; ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < D.acted.dim; ++j) {
            if (F.is_zero(m[j])) continue;
            Scalar c = F.mul(a[i], m[j]);
            for (std::size_t k = 0; k < D.acted.dim; ++k)
                out[k] = F.add(out[k], F.mul(c, D.action[i][j][k]));
        }
    }
    return out;
}

}  // namespace

CheckReport check_restricted_module(const LieModuleDesc& D, std::uint64_t seed, int samples) {
    const FieldDesc& F = D.acting.field;
    const int p = F.characteristic();
    CheckReport rep;
    rep.seed = seed;
    auto act = [&](const Vec& a, const Vec& m) { return eval_action(D, a, m); };
    bool ax1 = true, ax2 = true, ax3 = true, ax4 = true;
    std::string w1, w2, w3, w4;
    // Bilinear axioms on basis tuples.
    for (std::size_t i = 0; i < D.acting.dim; ++i)
        for (std::size_t j = 0; j < D.acted.dim; ++j)
            for (std::size_t k = 0; k < D.acted.dim; ++k)
                if (ax1) {
                    Vec a = D.acting.e(i), x = D.acted.e(j), y = D.acted.e(k);
                    Vec lhs = act(a, eval_bracket(D.acted, x, y));
                    Vec rhs = vec_add(F, eval_bracket(D.acted, act(a, x), y),
                                      eval_bracket(D.acted, x, act(a, y)));
                    if (lhs != rhs)
                        ax1 = false, w1 = "(a_" + std::to_string(i) + ",x_" + std::to_string(j) +
                                          ",y_" + std::to_string(k) + ")";
                }
    for (std::size_t i = 0; i < D.acting.dim; ++i)
        for (std::size_t j = 0; j < D.acting.dim; ++j)
            for (std::size_t k = 0; k < D.acted.dim; ++k)
                if (ax2) {
                    Vec a = D.acting.e(i), b = D.acting.e(j), x = D.acted.e(k);
                    Vec lhs = act(eval_bracket(D.acting, a, b), x);
                    Vec rhs = vec_sub(F, act(a, act(b, x)), act(b, act(a, x)));
                    if (lhs != rhs)
                        ax2 = false, w2 = "(a_" + std::to_string(i) + ",b_" + std::to_string(j) +
                                          ",x_" + std::to_string(k) + ")";
                }
    std::uint64_t st = seed;
    for (int t = 0; t < samples; ++t) {
        Vec a = random_element(D.acting, st);
        Vec x = random_element(D.acted, st);
        if (ax3) {
            // a |> x^[p] = ad_x^{p-1}(a |> x), ad taken in the acted algebra.
            Vec lhs = act(a, eval_pmap(D.acted, x));
            Vec rhs = act(a, x);
            for (int i = 0; i < p - 1; ++i) rhs = eval_bracket(D.acted, x, rhs);
            if (lhs != rhs) w3 = "a=" + vec_str(F, a) + " x=" + vec_str(F, x), ax3 = false;
        }
        if (ax4) {
            Vec lhs = act(eval_pmap(D.acting, a), x);
            Vec rhs = x;
            for (int i = 0; i < p; ++i) rhs = act(a, rhs);
            if (lhs != rhs) w4 = "a=" + vec_str(F, a) + " x=" + vec_str(F, x), ax4 = false;
        }
    }
    auto put = [&](bool ok, const char* name, const std::string& w) {
        if (ok)
            rep.add_pass(name);
        else
            rep.add_fail(name, w);
    };
    put(ax1, "a|>[x,y] = [a|>x,y] + [x,a|>y] on basis", w1);
    put(ax2, "[a,b]|>x = a|>(b|>x) - b|>(a|>x) on basis", w2);
    put(ax3, "a|>x^[p] = ad_x^{p-1}(a|>x) (random)", w3);
    put(ax4, "a^[p]|>x = p-fold a|>(...(a|>x)) (random)", w4);
    return rep;
}

CheckReport check_o_operator(const LieModuleDesc& D, const Mat& theta) {
    const FieldDesc& F = D.acting.field;
    if (theta.cols != D.acted.dim || theta.rows != D.acting.dim)
        throw DimensionMismatchError("check_o_operator: matrix shape");
    CheckReport rep;
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < D.acted.dim && ok; ++i)
        for (std::size_t j = 0; j < D.acted.dim && ok; ++j) {
            Vec x = D.acted.e(i), y = D.acted.e(j);
            Vec tx = mat_apply(F, theta, x), ty = mat_apply(F, theta, y);
            Vec lhs = eval_bracket(D.acting, tx, ty);
            Vec inner = vec_add(F, eval_bracket(D.acted, x, y), eval_action(D, tx, y));
            inner = vec_sub(F, inner, eval_action(D, ty, x));
            Vec rhs = mat_apply(F, theta, inner);
            if (lhs != rhs) ok = false, w = "(e_" + std::to_string(i) + ",e_" + std::to_string(j) + ")";
        }
    if (ok)
        rep.add_pass("[theta x, theta y] = theta([x,y] + theta(x)|>y - theta(y)|>x) on basis");
    else
        rep.add_fail("[theta x, theta y] = theta([x,y] + theta(x)|>y - theta(y)|>x) on basis", w);
    return rep;
}

CheckReport check_rota_baxter(const FdAlgebra& A, const Mat& R) {
    const FieldDesc& F = A.field;
    if (R.rows != A.dim || R.cols != A.dim)
        throw DimensionMismatchError("check_rota_baxter: matrix shape");
    CheckReport rep;
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < A.dim && ok; ++i)
        for (std::size_t j = 0; j < A.dim && ok; ++j) {
            Vec x = A.e(i), y = A.e(j);
            Vec rx = mat_apply(F, R, x), ry = mat_apply(F, R, y);
            Vec lhs = eval_bracket(A, rx, ry);
            Vec inner = vec_add(F, eval_bracket(A, rx, y), eval_bracket(A, x, ry));
            inner = vec_add(F, inner, A.bracket[i][j]);
            Vec rhs = mat_apply(F, R, inner);
            if (lhs != rhs) ok = false, w = "(" + A.basis[i] + "," + A.basis[j] + ")";
        }
    if (ok)
        rep.add_pass("[Rx,Ry] = R([Rx,y] + [x,Ry] + [x,y]) on basis");
    else
        rep.add_fail("[Rx,Ry] = R([Rx,y] + [x,Ry] + [x,y]) on basis", w);
    return rep;
}

FdAlgebra induced_postlie(const LieModuleDesc& D, const Mat& theta) {
    const FieldDesc& F = D.acted.field;
    FdAlgebra B = D.acted;
    std::vector<std::vector<Vec>> tab(B.dim, std::vector<Vec>(B.dim, B.zero()));
    for (std::size_t i = 0; i < B.dim; ++i) {
        Vec ti = mat_apply(F, theta, B.e(i));
        for (std::size_t j = 0; j < B.dim; ++j) tab[i][j] = eval_action(D, ti, B.e(j));
    }
    B.postlie = std::move(tab);
    return B;
}

CheckReport check_trivially_restricted_o_operator(const LieModuleDesc& D, const Mat& theta,
                                                  std::uint64_t seed, int samples) {
    const FieldDesc& F = D.acting.field;
    CheckReport rep;
    rep.seed = seed;
    rep.merge(check_o_operator(D, theta));
    FdAlgebra B = induced_postlie(D, theta);
    FdContext ctx{&B};
    bool ok = true;
    std::string w;
    std::uint64_t st = seed;
    for (int t = 0; t < samples && ok; ++t) {
        Vec x = random_element(B, st);
        Vec lhs = mat_apply(F, theta, sub_adjacent_pmap(ctx, x));
        Vec rhs = eval_pmap(D.acting, mat_apply(F, theta, x));
        if (lhs != rhs) ok = false, w = "x=" + vec_str(F, x);
    }
    if (ok)
        rep.add_pass("theta(x^[p] of the induced product) = theta(x)^[p] (random)");
    else
        rep.add_fail("theta(x^[p] of the induced product) = theta(x)^[p] (random)", w);
    return rep;
}

Vec env_action(const FdAlgebra& A, const std::vector<Vec>& word, const Vec& y) {
    const FieldDesc& F = A.field;
    if (word.empty()) return y;
    const Vec& x = word.front();
    std::vector<Vec> rest(word.begin() + 1, word.end());
    // (x E) |> y = x |> (E |> y) - (x |> E) |> y, with x |> E expanded across
    // the letters of E; each recursive call shortens the word by one.
    Vec out = eval_triangle(A, x, env_action(A, rest, y));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::vector<Vec> mod = rest;
        mod[i] = eval_triangle(A, x, rest[i]);
        out = vec_sub(F, out, env_action(A, mod, y));
    }
    return out;
}

CheckReport D_check(const FdAlgebra& A, const Vec& x, const Vec& y, const Vec& z) {
    const FieldDesc& F = A.field;
    const int p = F.characteristic();
    CheckReport rep;
    FdContext ctx{&A};
    auto D = [&](const Vec& u, const Vec& w) {
        std::vector<Vec> xs(static_cast<std::size_t>(p), u);
        return vec_sub(F, env_action(A, xs, w), eval_triangle(A, sub_adjacent_pmap(ctx, u), w));
    };
    Vec lhs = D(x, eval_triangle(A, y, z));
    Vec rhs = vec_add(F, eval_triangle(A, D(x, y), z), eval_triangle(A, y, D(x, z)));
    if (lhs == rhs)
        rep.add_pass("D(x)(y|>z) = D(x)(y)|>z + y|>D(x)(z)");
    else
        rep.add_fail("D(x)(y|>z) = D(x)(y)|>z + y|>D(x)(z)", pair_witness(A, x, y, lhs, rhs));
    Vec c1 = D(x, D(y, z));
    Vec c2 = D(y, D(x, z));
    if (c1 == c2)
        rep.add_pass("D(x)D(y) = D(y)D(x) on the given argument");
    else
        rep.add_fail("D(x)D(y) = D(y)D(x) on the given argument", pair_witness(A, x, y, c1, c2));
    return rep;
}

bool lcs_membership(const FdAlgebra& A, const Vec& v, int k) {
    if (k < 1) throw std::invalid_argument("lcs_membership: k must be >= 1");
    const FieldDesc& F = A.field;
    // Row basis of Z_k, with Z_1 = the whole algebra, Z_{j+1} = [g, Z_j].
    std::vector<Vec> span;
    for (std::size_t i = 0; i < A.dim; ++i) span.push_back(A.e(i));
    for (int j = 1; j < k; ++j) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < A.dim; ++i)
            for (const Vec& z : span) next.push_back(eval_bracket(A, A.e(i), z));
        span = std::move(next);
    }
    if (span.empty()) return vec_is_zero(v);
    Mat rows(span.size(), A.dim);
    for (std::size_t r = 0; r < span.size(); ++r)
        for (std::size_t c = 0; c < A.dim; ++c) rows.at(r, c) = span[r][c];
    return in_row_span(F, rows, v);
}

}  // namespace postlie

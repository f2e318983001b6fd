#include "postlie/catalog.hpp"

#include <algorithm>
#include <map>

namespace postlie {

namespace {

FdAlgebra blank(const FieldDesc& F, std::size_t dim, std::vector<std::string> names) {
    FdAlgebra A;
    A.field = F;
    A.dim = dim;
    A.basis = std::move(names);
    A.bracket.assign(dim, std::vector<Vec>(dim, Vec(dim, Scalar{})));
    A.pmap_basis = std::vector<Vec>(dim, Vec(dim, Scalar{}));
    A.postlie = std::vector<std::vector<Vec>>(dim, std::vector<Vec>(dim, Vec(dim, Scalar{})));
    return A;
}

// Set [e_i, e_j] = v e_k and the antisymmetric counterpart.
void set_bracket(FdAlgebra& A, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    A.bracket[i][j][k] = A.field.add(A.bracket[i][j][k], v);
    A.bracket[j][i][k] = A.field.sub(A.bracket[j][i][k], v);
}

void check_params(const std::string& name, const std::vector<Scalar>& params, std::size_t n) {
    if (params.size() != n)
        throw std::invalid_argument("catalog entry '" + name + "' takes " + std::to_string(n) +
                                    " parameter(s), got " + std::to_string(params.size()));
}

FieldDesc pick_field(const std::optional<FieldDesc>& field, int p) {
    if (!field) return FieldDesc::make(p);
    if (field->characteristic() != p)
        throw std::invalid_argument("this catalog entry needs characteristic " +
                                    std::to_string(p));
    return *field;
}

FdAlgebra dim2_p3(const FieldDesc& F, int family, const Scalar& lam) {
    FdAlgebra A = blank(F, 2, {"e1", "e2"});
    set_bracket(A, 0, 1, 1, F.one());
    (*A.pmap_basis)[0][0] = F.one();  // e1^[3] = e1, e2^[3] = 0
    auto& d = *A.postlie;
    switch (family) {
        case 1:
            d[0][1][1] = F.neg(F.one());
            d[1][1][1] = lam;
            break;
        case 2:
        case 3:
            d[0][0][1] = lam;
            d[0][1][1] = F.one();
            break;
        case 4:
            d[0][0][1] = lam;
            d[1][0][1] = F.one();
            break;
        default:
            throw std::invalid_argument("dim-2 family index out of range");
    }
    return A;
}

FdAlgebra dim3_p2(const FieldDesc& F, int which, const std::vector<Scalar>& params) {
    FdAlgebra A = blank(F, 3, {"e1", "e2", "e3"});
    set_bracket(A, 1, 2, 1, F.one());     // [e2, e3] = e2
    (*A.pmap_basis)[2][2] = F.one();      // e3^[2] = e3
    auto& d = *A.postlie;
    if (which == 1) {
        d[2][1][1] = params[0];  // e3 |> e2 = alpha e2
        d[2][2][1] = params[1];  // e3 |> e3 = beta e2
    } else {
        d[0][2][1] = params[0];  // e1 |> e3 = xi e2
    }
    return A;
}

FdAlgebra heisenberg_p3(const FieldDesc& F, const std::vector<Scalar>& params) {
    FdAlgebra A = blank(F, 3, {"e1", "e2", "e3"});
    set_bracket(A, 0, 1, 2, F.one());  // [e1, e2] = e3
    (*A.pmap_basis)[0][2] = F.one();   // e1^[3] = e3
    auto& d = *A.postlie;
    d[0][0][2] = params[0];  // e1 |> e1 = mu e3
    d[0][1][2] = params[1];  // e1 |> e2 = gamma e3
    d[1][0][2] = params[2];  // e2 |> e1 = theta e3
    return A;
}

FdAlgebra sl2_gf9() {
    // GF(9) = GF(3)[t] / (t^2 + 1); t^2 = 2, so t is a square root of 2.
    FieldDesc F = FieldDesc::make(3, {1, 0, 1});
    FdAlgebra A = blank(F, 3, {"e1", "e2", "e3"});
    set_bracket(A, 1, 2, 0, F.one());  // [e2, e3] = e1
    set_bracket(A, 2, 0, 1, F.one());  // [e3, e1] = e2
    set_bracket(A, 0, 1, 2, F.one());  // [e1, e2] = e3
    for (std::size_t i = 0; i < 3; ++i) (*A.pmap_basis)[i][i] = F.neg(F.one());
    Scalar t = F.gen();
    // The unique coefficient pair (up to the field automorphism t -> -t) for
    // which the product below satisfies every compatibility identity: an
    // exhaustive search over GF(9)^2 leaves (2+t, 2+2t) and its conjugate.
    Scalar alpha = F.add(F.from_int(2), t);                       // 2 + sqrt(2)
    Scalar beta = F.add(F.from_int(2), F.mul(F.from_int(2), t));  // 2 + 2 sqrt(2)
    auto& d = *A.postlie;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec ei = A.e(i);
        d[0][i] = vec_scale(F, F.neg(F.one()), eval_bracket(A, A.e(0), ei));
        Vec u = vec_add(F, vec_scale(F, alpha, A.e(1)), vec_scale(F, beta, A.e(2)));
        Vec v = vec_scale(F, F.neg(F.one()), eval_bracket(A, u, ei));
        d[1][i] = v;
        d[2][i] = v;
    }
    return A;
}

// Derivations of k[t]/(t^p) tensored back over the ring: basis t^k (x) d_i
// with d_i = t^i d/dt, index k * p + i.
FdAlgebra tensor_witt(const FieldDesc& F) {
    const int p = F.characteristic();
    auto idx = [p](int k, int i) { return static_cast<std::size_t>(k * p + i); };
    std::vector<std::string> names;
    for (int k = 0; k < p; ++k)
        for (int i = 0; i < p; ++i)
            names.push_back("t^" + std::to_string(k) + "*d" + std::to_string(i));
    FdAlgebra A = blank(F, static_cast<std::size_t>(p * p), std::move(names));

    // d_i as a p x p matrix on the monomial basis of k[t]/(t^p).
    auto der_matrix = [&](int i) {
        Mat M(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
        for (int l = 1; l < p; ++l) {
            int e = i + l - 1;
            if (e < p) M.at(static_cast<std::size_t>(e), static_cast<std::size_t>(l)) = F.from_int(l);
        }
        return M;
    };
    // Write a derivation matrix back as sum c_j d_j, reading f = M(t).
    auto matrix_to_coords = [&](const Mat& M) {
        Vec c(static_cast<std::size_t>(p), Scalar{});
        for (int j = 0; j < p; ++j) c[static_cast<std::size_t>(j)] = M.at(static_cast<std::size_t>(j), 1);
        return c;
    };

    for (int k = 0; k < p; ++k)
        for (int i = 0; i < p; ++i)
            for (int l = 0; l < p; ++l)
                for (int j = 0; j < p; ++j) {
                    // [t^k d_i, t^l d_j] = (j - i) t^{k+l} d_{i+j-1}
                    int e = k + l, m = i + j - 1;
                    if (e < p && m >= 0 && m < p)
                        A.bracket[idx(k, i)][idx(l, j)][idx(e, m)] = F.from_int(j - i);
                    // (t^k d_i) |> (t^l d_j) = t^k d_i(t^l) d_j = l t^{k+i+l-1} d_j
                    int g = k + i + l - 1;
                    if (l >= 1 && g < p) (*A.postlie)[idx(k, i)][idx(l, j)][idx(g, j)] = F.from_int(l);
                }
    // (t^k d_i)^[p] = t^{kp} (x) d_i^p = 0 unless k = 0.
    for (int i = 0; i < p; ++i) {
        Mat M = mat_identity(F, static_cast<std::size_t>(p));
        for (int s = 0; s < p; ++s) M = mat_mul(F, M, der_matrix(i));
        Vec c = matrix_to_coords(M);
        for (int j = 0; j < p; ++j) (*A.pmap_basis)[idx(0, i)][idx(0, j)] = c[static_cast<std::size_t>(j)];
    }
    return A;
}

}  // namespace

std::vector<CatalogEntry> catalog_list() {
    return {
        {"dim2-p3-family1", {"lambda"}, "dim-2 algebra over GF(3), product family 1"},
        {"dim2-p3-family2", {"lambda"}, "dim-2 algebra over GF(3), product family 2"},
        {"dim2-p3-family3", {"lambda"}, "dim-2 algebra over GF(3), product family 3"},
        {"dim2-p3-family4", {"lambda"}, "dim-2 algebra over GF(3), product family 4"},
        {"dim3-p2-tri1", {"alpha", "beta"}, "dim-3 algebra over GF(2), first product family"},
        {"dim3-p2-tri2", {"xi"}, "dim-3 algebra over GF(2), second product family"},
        {"heisenberg-p3", {"mu", "gamma", "theta"}, "Heisenberg algebra over GF(3)"},
        {"sl2-p3-gf9", {}, "sl2 over GF(9), fixed product table"},
        {"tensor-witt-p2", {}, "k[t]/(t^2) tensor its derivations, p = 2"},
        {"tensor-witt-p3", {}, "k[t]/(t^3) tensor its derivations, p = 3"},
    };
}

FdAlgebra catalog_build(const std::string& name, const std::vector<Scalar>& params,
                        const std::optional<FieldDesc>& field) {
    if (name.rfind("dim2-p3-family", 0) == 0 && name.size() == 15) {
        check_params(name, params, 1);
        int fam = name.back() - '0';
        if (fam < 1 || fam > 4) throw UnknownCatalogNameError("unknown catalog name: " + name);
        return dim2_p3(pick_field(field, 3), fam, params[0]);
    }
    if (name == "dim3-p2-tri1") {
        check_params(name, params, 2);
        return dim3_p2(pick_field(field, 2), 1, params);
    }
    if (name == "dim3-p2-tri2") {
        check_params(name, params, 1);
        return dim3_p2(pick_field(field, 2), 2, params);
    }
    if (name == "heisenberg-p3") {
        check_params(name, params, 3);
        return heisenberg_p3(pick_field(field, 3), params);
    }
    if (name == "sl2-p3-gf9") {
        check_params(name, params, 0);
        if (field) throw std::invalid_argument("sl2-p3-gf9 has a fixed coefficient field");
        return sl2_gf9();
    }
    if (name == "tensor-witt-p2") {
        check_params(name, params, 0);
        return tensor_witt(pick_field(field, 2));
    }
    if (name == "tensor-witt-p3") {
        check_params(name, params, 0);
        return tensor_witt(pick_field(field, 3));
    }
    throw UnknownCatalogNameError("unknown catalog name: " + name);
}

std::vector<Mat> dim3_p2_restricted_derivations(const FieldDesc& F) {
    // Span{ e1 (x) e1*, e2 (x) e2*, e2 (x) e3* } as matrices.
    std::vector<Mat> out;
    Mat a(3, 3), b(3, 3), c(3, 3);
    a.at(0, 0) = F.one();
    b.at(1, 1) = F.one();
    c.at(1, 2) = F.one();
    out.push_back(a);
    out.push_back(b);
    out.push_back(c);
    return out;
}

namespace {

using QWord = std::vector<int>;
using QElt = std::map<QWord, Scalar>;

int weight(const QWord& w) {
    int s = 0;
    for (int a : w) s += a;
    return s;
}

void add_term(const FieldDesc& F, QElt& acc, const QWord& w, const Scalar& c, int cap) {
    if (weight(w) > cap) return;
    Scalar& slot = acc[w];
    slot = F.add(slot, c);
    if (F.is_zero(slot)) acc.erase(w);
}

void accumulate(const FieldDesc& F, QElt& acc, const QElt& e, const Scalar& c) {
    for (const auto& [w, v] : e) {
        Scalar& slot = acc[w];
        slot = F.add(slot, F.mul(c, v));
        if (F.is_zero(slot)) acc.erase(w);
    }
}

QElt prepend(const FieldDesc& F, int letter, const QElt& e, int cap) {
    QElt out;
    for (const auto& [w, c] : e) {
        QWord nw;
        nw.reserve(w.size() + 1);
        nw.push_back(letter);
        nw.insert(nw.end(), w.begin(), w.end());
        add_term(F, out, nw, c, cap);
    }
    return out;
}

// Full product: u * v = a(u' * v) + b(u * v') + (a.b)(u' * v').
QElt qstar(const FieldDesc& F, const QWord& u, const QWord& v, int cap) {
    if (u.empty()) {
        QElt out;
        add_term(F, out, v, F.one(), cap);
        return out;
    }
    if (v.empty()) {
        QElt out;
        add_term(F, out, u, F.one(), cap);
        return out;
    }
    int a = u.front(), b = v.front();
    QWord uu(u.begin() + 1, u.end()), vv(v.begin() + 1, v.end());
    QElt out = prepend(F, a, qstar(F, uu, v, cap), cap);
    accumulate(F, out, prepend(F, b, qstar(F, u, vv, cap), cap), F.one());
    accumulate(F, out, prepend(F, a + b, qstar(F, uu, vv, cap), cap), F.one());
    return out;
}

}  // namespace

Vec QuasiShuffle::mul(const std::vector<std::vector<Vec>>& table, const Vec& x,
                      const Vec& y) const {
    const FieldDesc& F = field;
    Vec out(words.size(), Scalar{});
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (F.is_zero(x[i])) continue;
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (F.is_zero(y[j])) continue;
            Scalar c = F.mul(x[i], y[j]);
            for (std::size_t k = 0; k < words.size(); ++k)
                out[k] = F.add(out[k], F.mul(c, table[i][j][k]));
        }
    }
    return out;
}

Vec QuasiShuffle::power(const std::vector<std::vector<Vec>>& table, const Vec& x, int e) const {
    // e >= 1; all four products are associative in the truncation, so
    // left-fold order is immaterial.
    Vec out = x;
    for (int i = 1; i < e; ++i) out = mul(table, out, x);
    return out;
}

QuasiShuffle make_quasi_shuffle(const FieldDesc& F, int weight_cap) {
    if (weight_cap < 1) throw std::invalid_argument("weight cap must be >= 1");
    QuasiShuffle Q;
    Q.field = F;
    Q.weight_cap = weight_cap;
    // All nonempty words of total weight <= cap, i.e. compositions of 1..cap.
    std::map<QWord, std::size_t> index;
    std::vector<QWord> pending{{}};
    for (std::size_t h = 0; h < pending.size(); ++h) {
        QWord w = pending[h];
        int room = weight_cap - weight(w);
        for (int a = 1; a <= room; ++a) {
            QWord nw = w;
            nw.push_back(a);
            index.emplace(nw, 0);
            pending.push_back(nw);
        }
    }
    for (auto& [w, pos] : index) {
        pos = Q.words.size();
        Q.words.push_back(w);
    }
    const std::size_t n = Q.words.size();
    auto to_vec = [&](const QElt& e) {
        Vec v(n, Scalar{});
        for (const auto& [w, c] : e) v[index.at(w)] = c;
        return v;
    };
    auto empty_tab = [&] { return std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, Vec(n, Scalar{}))); };
    Q.prec = empty_tab();
    Q.succ = empty_tab();
    Q.dot = empty_tab();
    Q.star = empty_tab();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const QWord& u = Q.words[i];
            const QWord& v = Q.words[j];
            int a = u.front(), b = v.front();
            QWord uu(u.begin() + 1, u.end()), vv(v.begin() + 1, v.end());
            // u prec v = a(u' * v); u succ v = b(u * v'); u . v = (a.b)(u' * v').
            QElt prec = prepend(F, a, qstar(F, uu, v, weight_cap), weight_cap);
            QElt succ = prepend(F, b, qstar(F, u, vv, weight_cap), weight_cap);
            QElt dot = prepend(F, a + b, qstar(F, uu, vv, weight_cap), weight_cap);
            Q.prec[i][j] = to_vec(prec);
            Q.succ[i][j] = to_vec(succ);
            Q.dot[i][j] = to_vec(dot);
            Vec s = vec_add(F, Q.prec[i][j], Q.succ[i][j]);
            Q.star[i][j] = vec_add(F, s, Q.dot[i][j]);
        }

    FdAlgebra& A = Q.algebra;
    A.field = F;
    A.dim = n;
    for (const QWord& w : Q.words) {
        std::string name;
        for (int a : w) name += "z" + std::to_string(a);
        A.basis.push_back(name);
    }
    A.bracket.assign(n, std::vector<Vec>(n, Vec(n, Scalar{})));
    A.postlie = std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, Vec(n, Scalar{})));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            A.bracket[i][j] = vec_sub(F, Q.dot[i][j], Q.dot[j][i]);
            // x |> y = y prec x - x succ y
            (*A.postlie)[i][j] = vec_sub(F, Q.prec[j][i], Q.succ[i][j]);
        }
    return Q;
}

CheckReport quasi_shuffle_axioms(const QuasiShuffle& Q) {
    CheckReport rep;
    const FieldDesc& F = Q.field;
    const std::size_t n = Q.words.size();
    auto check = [&](const char* name, auto&& lhs_fn, auto&& rhs_fn) {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k) {
                    Vec a(n, Scalar{}), b(n, Scalar{}), c(n, Scalar{});
                    a[i] = F.one();
                    b[j] = F.one();
                    c[k] = F.one();
                    if (lhs_fn(a, b, c) != rhs_fn(a, b, c))
                        ok = false, wit = "(" + Q.word_name(i) + ", " + Q.word_name(j) + ", " +
                                          Q.word_name(k) + ")";
                }
        if (ok)
            rep.add_pass(name);
        else
            rep.add_fail(name, wit);
    };
    auto P = [&](const Vec& x, const Vec& y) { return Q.mul(Q.prec, x, y); };
    auto S = [&](const Vec& x, const Vec& y) { return Q.mul(Q.succ, x, y); };
    auto D = [&](const Vec& x, const Vec& y) { return Q.mul(Q.dot, x, y); };
    auto T = [&](const Vec& x, const Vec& y) { return Q.mul(Q.star, x, y); };
    check(
        "(a<b)<c = a<(b*c)", [&](const Vec& a, const Vec& b, const Vec& c) { return P(P(a, b), c); },
        [&](const Vec& a, const Vec& b, const Vec& c) { return P(a, T(b, c)); });
    check(
        "a>(b>c) = (a*b)>c", [&](const Vec& a, const Vec& b, const Vec& c) { return S(a, S(b, c)); },
        [&](const Vec& a, const Vec& b, const Vec& c) { return S(T(a, b), c); });
    check(
        "(a>b)<c = a>(b<c)", [&](const Vec& a, const Vec& b, const Vec& c) { return P(S(a, b), c); },
        [&](const Vec& a, const Vec& b, const Vec& c) { return S(a, P(b, c)); });
    check(
        "(a.b)<c = a.(b<c)", [&](const Vec& a, const Vec& b, const Vec& c) { return P(D(a, b), c); },
        [&](const Vec& a, const Vec& b, const Vec& c) { return D(a, P(b, c)); });
    check(
        "(a>b).c = a>(b.c)", [&](const Vec& a, const Vec& b, const Vec& c) { return D(S(a, b), c); },
        [&](const Vec& a, const Vec& b, const Vec& c) { return S(a, D(b, c)); });
    check(
        "a.(b>c) = (a<b).c", [&](const Vec& a, const Vec& b, const Vec& c) { return D(a, S(b, c)); },
        [&](const Vec& a, const Vec& b, const Vec& c) { return D(P(a, b), c); });
    return rep;
}

CheckReport quasi_shuffle_restricted_postlie_check(const QuasiShuffle& Q, std::uint64_t seed,
                                                   int samples) {
    const int p = Q.field.characteristic();
    PMapFn star_pow = [&Q, p](const Vec& x) { return Q.power(Q.star, x, p); };
    PMapFn dot_pow = [&Q, p](const Vec& x) { return Q.power(Q.dot, x, p); };
    return check_restricted_postlie(Q.algebra, seed, star_pow, dot_pow, samples);
}

}  // namespace postlie

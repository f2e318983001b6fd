#include "postlie/freelie.hpp"

#include <stdexcept>

#include "postlie/perms.hpp"

namespace postlie {

namespace {

void tensor_add_term(const FieldDesc& F, TensorElt& t, const Word& w, const Scalar& c) {
    auto [it, inserted] = t.try_emplace(w, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) t.erase(it);
    } else if (F.is_zero(c)) {
        t.erase(it);
    }
}

TensorElt tensor_concat(const FieldDesc& F, const TensorElt& a, const TensorElt& b) {
    TensorElt out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            tensor_add_term(F, out, w, F.mul(ca, cb));
        }
    return out;
}

TensorElt tensor_commutator(const FieldDesc& F, const TensorElt& a, const TensorElt& b) {
    TensorElt out = tensor_concat(F, a, b);
    for (auto& [w, c] : tensor_concat(F, b, a)) tensor_add_term(F, out, w, F.neg(c));
    return out;
}

bool is_lyndon(const Word& w) {
    // w is Lyndon iff it is strictly smaller than all of its proper suffixes.
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
            return false;
    return true;
}

// Standard factorization w = uv with v the longest proper Lyndon suffix.
std::size_t standard_split(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + i, w.end());
        if (is_lyndon(suffix)) return i;
    }
    throw std::logic_error("no Lyndon suffix; input was not a Lyndon word");
}

}  // namespace

LieElt FreeLie::gen(int i) const {
    if (i < 0 || i >= m_) throw std::out_of_range("generator index out of range");
    LieElt a;
    a.terms[{i}] = field_.one();
    return a;
}

LieElt FreeLie::add(const LieElt& a, const LieElt& b) const {
    LieElt out = a;
    for (const auto& [w, c] : b.terms) tensor_add_term(field_, out.terms, w, c);
    return out;
}

LieElt FreeLie::sub(const LieElt& a, const LieElt& b) const {
    LieElt out = a;
    for (const auto& [w, c] : b.terms) tensor_add_term(field_, out.terms, w, field_.neg(c));
    return out;
}

LieElt FreeLie::scale(const Scalar& c, const LieElt& a) const {
    LieElt out;
    if (field_.is_zero(c)) return out;
    for (const auto& [w, coeff] : a.terms) out.terms[w] = field_.mul(c, coeff);
    return out;
}

LieElt FreeLie::bracket(const LieElt& a, const LieElt& b) const {
    return from_tensor(tensor_commutator(field_, to_tensor(a), to_tensor(b)));
}

LieElt FreeLie::right_nested(const std::vector<LieElt>& elts) const {
    if (elts.empty()) throw std::invalid_argument("right_nested: empty input");
    TensorElt acc = to_tensor(elts.back());
    for (auto it = elts.rbegin() + 1; it != elts.rend(); ++it)
        acc = tensor_commutator(field_, to_tensor(*it), acc);
    return from_tensor(std::move(acc));
}

std::vector<Word> FreeLie::lyndon_basis(int degree) const {
    // Duval's algorithm, filtered to the exact length.
    std::vector<Word> out;
    if (degree < 1 || m_ < 1) return out;
    Word w{0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == degree) out.push_back(w);
        const Word prefix = w;
        while (static_cast<int>(w.size()) < degree)
            w.push_back(prefix[(w.size()) % prefix.size()]);
        while (!w.empty() && w.back() == m_ - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

TensorElt FreeLie::expand_lyndon(const Word& w) const {
    if (w.size() == 1) return {{w, field_.one()}};
    const std::size_t cut = standard_split(w);
    const TensorElt left = expand_lyndon(Word(w.begin(), w.begin() + cut));
    const TensorElt right = expand_lyndon(Word(w.begin() + cut, w.end()));
    return tensor_commutator(field_, left, right);
}

LieElt FreeLie::from_tensor(TensorElt t) const {
    LieElt out;
    while (!t.empty()) {
        // Smallest word in lexicographic-by-length-grouping: std::map orders
        // lexicographically, which mixes lengths; a Lie element is graded, so
        // reduce each word-length component independently via the smallest
        // word overall — the expansion of its bracketing stays in its degree.
        const Word w = t.begin()->first;
        const Scalar c = t.begin()->second;
        if (!is_lyndon(w))
            throw std::invalid_argument("not a Lie element: leading word " + word_to_string(w) +
                                        " is not Lyndon");
        out.terms[w] = c;
        for (const auto& [ew, ec] : expand_lyndon(w))
            tensor_add_term(field_, t, ew, field_.neg(field_.mul(c, ec)));
    }
    return out;
}

TensorElt FreeLie::to_tensor(const LieElt& a) const {
    TensorElt out;
    for (const auto& [w, c] : a.terms)
        for (const auto& [ew, ec] : expand_lyndon(w))
            tensor_add_term(field_, out, ew, field_.mul(c, ec));
    return out;
}

std::string FreeLie::word_to_string(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ".";
        out += "x" + std::to_string(w[i]);
    }
    return out;
}

std::string FreeLie::to_string(const LieElt& a) const {
    if (a.terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : a.terms) {
        if (!out.empty()) out += " + ";
        out += field_.to_string(c) + "*[" + word_to_string(w) + "]";
    }
    return out;
}

CheckReport check_unshuffle_rewrite(int n, int j, const FieldDesc& field) {
    CheckReport report;
    if (n < 2 || n > 6 || j < 1 || j > n - 1)
        throw std::out_of_range("check_unshuffle_rewrite: need 2 <= n <= 6, 1 <= j <= n-1");
    FreeLie L(field, n);
    std::vector<LieElt> gens;
    for (int i = 0; i < n; ++i) gens.push_back(L.gen(i));

    // Left side: the last symbol moved to position j (1-based).
    std::vector<LieElt> lhs_factors;
    for (int i = 1; i <= n; ++i) {
        if (i == j) lhs_factors.push_back(gens[n - 1]);
        if (i <= n - 1) lhs_factors.push_back(gens[i - 1]);
    }
    const LieElt lhs = L.right_nested(lhs_factors);

    // c is the shuffle moving position n to position j (0-based: c[i] below).
    Perm c(n);
    for (int i = 0; i < n - 1; ++i) c[i] = (i < j - 1) ? i : i + 1;
    c[n - 1] = j - 1;

    LieElt rhs = L.zero();
    for (int s = 1; s <= n - 1; ++s) {
        for (const Perm& sigma : unshuffles_bar(n - s, s)) {
            // conditions: (sigma c)(n) = n and sigma^{-1}(n-s+1) != n (1-based)
            if (sigma[c[n - 1]] != n - 1) continue;
            const Perm sigma_inv = perm_inverse(sigma);
            if (sigma_inv[n - s] == n - 1) continue;
            Perm sc(n);
            for (int i = 0; i < n; ++i) sc[i] = sigma[c[i]];
            // [x_{sc.l}] with l = identity tuple: factor at position k is
            // the generator with index sc^{-1}(k).
            const Perm sc_inv = perm_inverse(sc);
            std::vector<LieElt> factors;
            for (int k = 0; k < n; ++k) factors.push_back(gens[sc_inv[k]]);
            LieElt term = L.right_nested(factors);
            if (s % 2 == 1) term = L.scale(field.from_int(-1), term);
            rhs = L.add(rhs, term);
        }
    }

    const std::string name =
        "bracket rewrite n=" + std::to_string(n) + " j=" + std::to_string(j);
    if (lhs == rhs)
        report.add_pass(name);
    else
        report.add_fail(name, "lhs = " + L.to_string(lhs) + ", rhs = " + L.to_string(rhs));
    return report;
}

std::int64_t witt_dimension(int m, int d) {
    // (1/d) sum_{e | d} mu(e) m^{d/e}
    auto mobius = [](int x) {
        int result = 1;
        for (int q = 2; q * q <= x; ++q) {
            if (x % q == 0) {
                x /= q;
                if (x % q == 0) return 0;
                result = -result;
            }
        }
        if (x > 1) result = -result;
        return result;
    };
    std::int64_t total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        std::int64_t power = 1;
        for (int i = 0; i < d / e; ++i) power *= m;
        total += mobius(e) * power;
    }
    return total / d;
}

}  // namespace postlie

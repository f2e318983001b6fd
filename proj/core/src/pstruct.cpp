#include "postlie/pstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace postlie {

Scalar coefficient_C(const std::vector<int>& composition, const FieldDesc& field) {
    Scalar out = field.one();
    int partial = 0;
    for (std::size_t v = 0; v + 1 < composition.size(); ++v) {
        partial += composition[v];
        out = field.mul(out, field.from_int(partial));
    }
    return out;
}

std::int64_t composition_weight(int p, const std::vector<int>& composition) {
    std::int64_t denom = 1;
    for (const int part : composition) denom *= factorial(part - 1);
    const std::int64_t numer = factorial(p - 1);
    if (numer % denom != 0) throw std::logic_error("composition weight is not an integer");
    return numer / denom;
}

Scalar friedrich_sum(const std::vector<int>& ell, int s, const Perm& beta,
                     const FieldDesc& field, bool reversed) {
    const int n = static_cast<int>(ell.size());
    if (n < 2 || s < 1 || s > n - 1)
        throw std::out_of_range("friedrich_sum: need n >= 2 and 1 <= s <= n-1");
    const std::vector<int> base = perm_act(beta, ell);
    const auto alphas = reversed ? shuffles_bar(n - s, s) : shuffles(n - s, s);
    Scalar out = field.zero();
    for (const Perm& alpha : alphas)
        out = field.add(out, field.inv(coefficient_C(perm_act(alpha, base), field)));
    return out;
}

namespace {

// 1/n * (p-1)! / prod((part-1)!), as a field element; callers guarantee
// n < p so that n is invertible.
Scalar pl_prefactor(const std::vector<int>& lambda, const FieldDesc& field) {
    const int p = static_cast<int>(field.characteristic());
    const int n = static_cast<int>(lambda.size());
    const Scalar weight = field.from_int(composition_weight(p, lambda));
    return field.mul(field.inv(field.from_int(n)), weight);
}

// Generator index of a part value: position among the distinct parts.
std::vector<int> part_symbols(const std::vector<int>& lambda) {
    std::vector<int> distinct = lambda;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> symbol_of(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        symbol_of[i] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), lambda[i]) - distinct.begin());
    return symbol_of;
}

LieElt bracket_of_tuple(const FreeLie& L, const std::vector<int>& lambda,
                        const std::vector<int>& tuple) {
    // Map each part value back to its generator (parts of lambda are the
    // symbol universe).
    std::vector<int> distinct = lambda;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<LieElt> factors;
    for (const int part : tuple) {
        const auto it = std::lower_bound(distinct.begin(), distinct.end(), part);
        factors.push_back(L.gen(static_cast<int>(it - distinct.begin())));
    }
    return L.right_nested(factors);
}

}  // namespace

LieElt P_lambda(const std::vector<int>& lambda, const FreeLie& L) {
    const FieldDesc& field = L.field();
    const int p = static_cast<int>(field.characteristic());
    const int n = static_cast<int>(lambda.size());
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != p)
        throw std::invalid_argument("P_lambda: parts must sum to the characteristic");
    if (!std::is_sorted(lambda.begin(), lambda.end()))
        throw std::invalid_argument("P_lambda: parts must be weakly increasing");
    if (n == p) return {};  // all parts 1: every right-nested bracket vanishes

    const Scalar prefactor = pl_prefactor(lambda, field);
    LieElt out;
    std::vector<int> tuple = lambda;
    do {
        const Scalar coeff = field.mul(prefactor, field.inv(coefficient_C(tuple, field)));
        out = L.add(out, L.scale(coeff, bracket_of_tuple(L, lambda, tuple)));
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    return out;
}

std::vector<Perm> sh_lambda_plus(const std::vector<int>& lambda) {
    const int n = static_cast<int>(lambda.size());
    // Block structure: maximal runs of equal parts.
    std::vector<int> block_of(n);
    int blocks = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && lambda[i] != lambda[i - 1]) ++blocks;
        block_of[i] = blocks;
    }
    int last_block_size = 0;
    for (int i = 0; i < n; ++i) last_block_size += block_of[i] == blocks;

    std::vector<Perm> out;
    for (const Perm& sigma : all_perms(n)) {
        if (sigma[n - 1] != n - 1) continue;
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            if (block_of[i] == block_of[i + 1] && sigma[i] > sigma[i + 1]) ok = false;
        if (!ok) continue;
        if (n >= 2) {
            const Perm inv = perm_inverse(sigma);
            if (inv[n - 2] >= n - last_block_size) continue;
        }
        out.push_back(sigma);
    }
    return out;
}

LieElt general_P_expansion(const std::vector<int>& lambda, const FreeLie& L) {
    const FieldDesc& field = L.field();
    const int p = static_cast<int>(field.characteristic());
    const int n = static_cast<int>(lambda.size());
    if (!std::is_sorted(lambda.begin(), lambda.end()))
        throw std::invalid_argument("general_P_expansion: parts must be weakly increasing");
    if (n == p) return {};
    if (n == 1) return bracket_of_tuple(L, lambda, lambda);

    int last_multiplicity = 0;
    for (const int part : lambda) last_multiplicity += part == lambda.back();
    const Scalar prefactor =
        field.mul(field.inv(field.from_int(last_multiplicity)), pl_prefactor(lambda, field));

    LieElt out;
    for (const Perm& beta : sh_lambda_plus(lambda)) {
        const std::vector<int> beta_lambda = perm_act(beta, lambda);
        Scalar inner = field.inv(coefficient_C(beta_lambda, field));
        for (int s = 1; s <= n - 1; ++s) {
            for (const Perm& sigma : shuffles_bar(n - s, s)) {
                if (sigma[n - s] != n - 1) continue;  // sigma(n-s+1) = n, 1-based
                const Scalar term =
                    field.inv(coefficient_C(perm_act(sigma, beta_lambda), field));
                // sign (-1)^(s+1)
                inner = (s % 2 == 1) ? field.add(inner, term) : field.sub(inner, term);
            }
        }
        out = L.add(out, L.scale(field.mul(prefactor, inner),
                                 bracket_of_tuple(L, lambda, beta_lambda)));
    }
    return out;
}

}  // namespace postlie

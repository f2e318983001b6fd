#pragma once

// The coefficient combinatorics behind the induced p-map of a post-Lie
// product: partial-sum coefficients C, the p-map formula itself, the closed
// form for L(x), the per-partition Lie elements P_lambda, shuffle-sum
// cancellations, and the simplified expansion over constrained tuples.
//
// The evaluation routines are generic over a context providing the field,
// a bracket, the post-Lie product, and a base p-map:
//
//   struct Ctx {
//     using Elem = ...;
//     const FieldDesc& field() const;
//     Elem zero() const;
//     Elem add(const Elem&, const Elem&) const;
//     Elem scale(const Scalar&, const Elem&) const;
//     Elem bracket(const Elem&, const Elem&) const;
//     Elem triangle(const Elem&, const Elem&) const;
//     Elem pmap(const Elem&) const;
//   };

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "postlie/freelie.hpp"
#include "postlie/perms.hpp"
#include "postlie/scalars.hpp"
#include "postlie/trees.hpp"

namespace postlie {

// Product of the proper partial sums of a composition, reduced into the
// field; nonzero whenever the parts sum to the field characteristic.
Scalar coefficient_C(const std::vector<int>& composition, const FieldDesc& field);

// (p-1)! / ((l_1 - 1)! ... (l_n - 1)!), exact in integers.
std::int64_t composition_weight(int p, const std::vector<int>& composition);

// sum over shuffle permutations alpha (plain Sh(n-s, s), or the variant with
// the second block reversed) of C^{-1} evaluated on (alpha beta) . ell.
// Vanishes in the field for every admissible input.
Scalar friedrich_sum(const std::vector<int>& ell, int s, const Perm& beta,
                     const FieldDesc& field, bool reversed);

// The per-partition Lie element: lambda is given as a weakly increasing
// tuple of parts summing to the characteristic.  Generators of the returned
// element are indexed by distinct part values in increasing order.
LieElt P_lambda(const std::vector<int>& lambda, const FreeLie& L);

// The same element expanded over the constrained shuffle family Sh(lambda)+
// with signed reversed-shuffle coefficient sums; must agree with P_lambda.
LieElt general_P_expansion(const std::vector<int>& lambda, const FreeLie& L);

// Block shuffles of lambda (increasing within each run of equal parts) with
// sigma(n) = n and the preimage of n-1 outside the last block.
std::vector<Perm> sh_lambda_plus(const std::vector<int>& lambda);

namespace detail {

template <class Ctx>
std::vector<typename Ctx::Elem> bullet_powers(const Ctx& ctx, const typename Ctx::Elem& x,
                                              int up_to) {
    // powers[k] = x |> (x |> ( ... (x |> x))), k factors; powers[0] unused
    std::vector<typename Ctx::Elem> powers(up_to + 1, x);
    for (int k = 2; k <= up_to; ++k) powers[k] = ctx.triangle(x, powers[k - 1]);
    return powers;
}

template <class Ctx>
typename Ctx::Elem right_nested_bullets(const Ctx& ctx,
                                        const std::vector<typename Ctx::Elem>& powers,
                                        const std::vector<int>& ell) {
    typename Ctx::Elem acc = powers[ell.back()];
    for (auto it = ell.rbegin() + 1; it != ell.rend(); ++it)
        acc = ctx.bracket(powers[*it], acc);
    return acc;
}

}  // namespace detail

// x^{[p]} plus the full composition sum of C-weighted right-nested brackets
// of bullet powers.
template <class Ctx>
typename Ctx::Elem sub_adjacent_pmap(const Ctx& ctx, const typename Ctx::Elem& x) {
    const FieldDesc& F = ctx.field();
    const int p = static_cast<int>(F.characteristic());
    const auto powers = detail::bullet_powers(ctx, x, p);

    typename Ctx::Elem out = ctx.pmap(x);
    for (int n = 1; n <= p - 1; ++n) {
        const Scalar inv_n = F.inv(F.from_int(n));
        for (const auto& ell : compositions(p, n)) {
            Scalar coeff = F.mul(inv_n, F.from_int(composition_weight(p, ell)));
            coeff = F.mul(coeff, F.inv(coefficient_C(ell, F)));
            out = ctx.add(out, ctx.scale(coeff, detail::right_nested_bullets(ctx, powers, ell)));
        }
    }
    return out;
}

// The bracket part of the p-map formula on its own: the sum over
// compositions with at least two parts, one of them >= 2.
template <class Ctx>
typename Ctx::Elem L_closed_form(const Ctx& ctx, const typename Ctx::Elem& x) {
    const FieldDesc& F = ctx.field();
    const int p = static_cast<int>(F.characteristic());
    const auto powers = detail::bullet_powers(ctx, x, p);

    typename Ctx::Elem out = ctx.zero();
    for (int n = 2; n <= p - 1; ++n) {
        const Scalar inv_n = F.inv(F.from_int(n));
        for (const auto& ell : compositions(p, n)) {
            if (*std::max_element(ell.begin(), ell.end()) < 2) continue;
            Scalar coeff = F.mul(inv_n, F.from_int(composition_weight(p, ell)));
            coeff = F.mul(coeff, F.inv(coefficient_C(ell, F)));
            out = ctx.add(out, ctx.scale(coeff, detail::right_nested_bullets(ctx, powers, ell)));
        }
    }
    return out;
}

// Simplified expansion of the p-map over tuples whose last part strictly
// dominates: must agree with sub_adjacent_pmap.
template <class Ctx>
typename Ctx::Elem expansion_theorem(const Ctx& ctx, const typename Ctx::Elem& x) {
    const FieldDesc& F = ctx.field();
    const int p = static_cast<int>(F.characteristic());
    const auto powers = detail::bullet_powers(ctx, x, p);

    typename Ctx::Elem out = ctx.add(ctx.pmap(x), powers[p]);
    for (int n = 2; n <= p - 1; ++n) {
        for (const auto& ell : compositions(p, n)) {
            const int last = ell.back();
            if (last < 2) continue;
            bool admissible = last > ell[n - 2];
            for (int i = 0; i + 1 < n && admissible; ++i) admissible = last >= ell[i];
            if (!admissible) continue;

            int count_max = 0;
            for (const int part : ell) count_max += part == last;

            // C^{-1} of ell itself plus the signed reversed-shuffle sums:
            // the last s entries of ell, in reversed order, are interleaved
            // into positions that include the final one.
            Scalar inner = F.inv(coefficient_C(ell, F));
            for (int s = 1; s <= n - 1; ++s)
                for (const Perm& sigma : shuffles_bar(n - s, s)) {
                    if (sigma[n - s] != n - 1) continue;
                    const Scalar term = F.inv(coefficient_C(perm_act(sigma, ell), F));
                    inner = (s % 2 == 1) ? F.add(inner, term) : F.sub(inner, term);
                }

            Scalar coeff = F.inv(F.from_int(count_max * n));
            coeff = F.mul(coeff, F.from_int(composition_weight(p, ell)));
            coeff = F.mul(coeff, inner);
            out = ctx.add(out, ctx.scale(coeff, detail::right_nested_bullets(ctx, powers, ell)));
        }
    }
    return out;
}

// Free one-generator context: elements of the envelope, bracket the
// concatenation commutator, base p-map the p-th concatenation power.
struct FreeContext {
    using Elem = EnvElt;

    const Envelope* env;

    const FieldDesc& field() const { return env->field(); }
    Elem zero() const { return env->zero(); }
    Elem add(const Elem& a, const Elem& b) const { return env->add(a, b); }
    Elem scale(const Scalar& c, const Elem& a) const { return env->scale(c, a); }
    Elem bracket(const Elem& a, const Elem& b) const {
        return env->sub(env->mul(a, b), env->mul(b, a));
    }
    Elem triangle(const Elem& a, const Elem& b) const { return env->triangle(a, b); }
    Elem pmap(const Elem& x) const {
        Elem out = x;
        for (std::uint32_t i = 1; i < env->field().characteristic(); ++i) out = env->mul(out, x);
        return out;
    }
};

}  // namespace postlie

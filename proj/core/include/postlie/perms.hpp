#pragma once

// Small combinatorial helpers: compositions, partitions, and the shuffle
// permutation families used by the envelope / p-map formulas.
//
// A permutation sigma of {0, ..., n-1} is stored as a vector v with
// v[i] = sigma(i).  Acting on a tuple ell gives (sigma . ell)[j] =
// ell[sigma^{-1}(j)], i.e. the entry at position i moves to position sigma(i).

#include <cstdint>
#include <vector>

namespace postlie {

using Perm = std::vector<int>;

// All sequences of positive integers with the given number of parts summing
// to n, in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int parts);

// All partitions of n, each written as a weakly increasing sequence.
std::vector<std::vector<int>> partitions(int n);

Perm perm_inverse(const Perm& sigma);

// (sigma . ell)[j] = ell[sigma^{-1}(j)]
std::vector<int> perm_act(const Perm& sigma, const std::vector<int>& ell);

// (a,b)-shuffles: sigma increasing on {0..a-1} and on {a..a+b-1}.
std::vector<Perm> shuffles(int a, int b);

// Variant with the second block reversed: sigma increasing on {0..a-1} and
// decreasing on {a..a+b-1}.
std::vector<Perm> shuffles_bar(int a, int b);

// Inverses of shuffles_bar(a, b).
std::vector<Perm> unshuffles_bar(int a, int b);

// All permutations of {0..n-1}.
std::vector<Perm> all_perms(int n);

std::int64_t factorial(int n);

}  // namespace postlie

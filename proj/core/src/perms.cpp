#include "postlie/perms.hpp"

#include <algorithm>
#include <numeric>

namespace postlie {

namespace {

void compositions_rec(int n, int parts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (n >= 1) {
            cur.push_back(n);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first <= n - (parts - 1); ++first) {
        cur.push_back(first);
        compositions_rec(n - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

void partitions_rec(int n, int min_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = min_part; part <= n; ++part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    if (parts < 1 || n < parts) return out;
    std::vector<int> cur;
    compositions_rec(n, parts, cur, out);
    return out;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, 1, cur, out);
    return out;
}

Perm perm_inverse(const Perm& sigma) {
    Perm inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
    return inv;
}

std::vector<int> perm_act(const Perm& sigma, const std::vector<int>& ell) {
    std::vector<int> out(ell.size());
    for (std::size_t i = 0; i < ell.size(); ++i) out[sigma[i]] = ell[i];
    return out;
}

std::vector<Perm> shuffles(int a, int b) {
    // Choose the image set of the first block; images within each block are
    // forced by monotonicity.
    std::vector<Perm> out;
    const int n = a + b;
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + a, 1);
    std::sort(mask.begin(), mask.end());
    do {
        Perm sigma(n);
        int first = 0, second = 0;
        std::vector<int> first_pos, second_pos;
        for (int j = 0; j < n; ++j) (mask[j] ? first_pos : second_pos).push_back(j);
        for (int i = 0; i < a; ++i) sigma[i] = first_pos[first++];
        for (int i = 0; i < b; ++i) sigma[a + i] = second_pos[second++];
        out.push_back(std::move(sigma));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

std::vector<Perm> shuffles_bar(int a, int b) {
    std::vector<Perm> out = shuffles(a, b);
    // Reverse the images of the second block so it becomes decreasing.
    for (auto& sigma : out) std::reverse(sigma.begin() + a, sigma.end());
    return out;
}

std::vector<Perm> unshuffles_bar(int a, int b) {
    std::vector<Perm> out = shuffles_bar(a, b);
    for (auto& sigma : out) sigma = perm_inverse(sigma);
    return out;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace postlie

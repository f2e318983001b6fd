#pragma once

// Free Lie algebra on a totally ordered alphabet {0 < 1 < ... < m-1},
// with elements normalized onto the Lyndon-word basis.
//
// Normalization goes through the tensor algebra: the standard bracketing of a
// Lyndon word w expands as w plus lexicographically greater words, so a Lie
// element written as a noncommutative polynomial can be reduced by repeatedly
// stripping its lexicographically smallest word.  Equality of Lie elements
// becomes coefficient-wise equality of the resulting Lyndon expansions.

#include <map>
#include <string>
#include <vector>

#include "postlie/report.hpp"
#include "postlie/scalars.hpp"

namespace postlie {

using Word = std::vector<int>;

// Noncommutative polynomial in the tensor algebra; also used for the Lyndon
// expansions (keys restricted to Lyndon words).
using TensorElt = std::map<Word, Scalar>;

struct LieElt {
    TensorElt terms;  // Lyndon words -> coefficients

    friend bool operator==(const LieElt&, const LieElt&) = default;
};

class FreeLie {
  public:
    FreeLie(FieldDesc field, int alphabet_size)
        : field_(std::move(field)), m_(alphabet_size) {}

    const FieldDesc& field() const { return field_; }
    int alphabet_size() const { return m_; }

    LieElt zero() const { return {}; }
    LieElt gen(int i) const;
    LieElt add(const LieElt& a, const LieElt& b) const;
    LieElt sub(const LieElt& a, const LieElt& b) const;
    LieElt scale(const Scalar& c, const LieElt& a) const;
    LieElt bracket(const LieElt& a, const LieElt& b) const;
    // [x1, [x2, ... [x_{n-1}, x_n]]]
    LieElt right_nested(const std::vector<LieElt>& elts) const;

    // All Lyndon words of the given length (Duval's algorithm).
    std::vector<Word> lyndon_basis(int degree) const;

    // Tensor expansion of the standard (right) bracketing of a Lyndon word.
    TensorElt expand_lyndon(const Word& w) const;
    // Reduce a Lie element given in tensor form onto the Lyndon basis.
    // Throws if the input is not a Lie element.
    LieElt from_tensor(TensorElt t) const;
    TensorElt to_tensor(const LieElt& a) const;

    // Standard bracketing as a parenthesized string, for reports.
    std::string word_to_string(const Word& w) const;
    std::string to_string(const LieElt& a) const;

  private:
    FieldDesc field_;
    int m_;
};

// In the free Lie algebra on n distinct symbols, verifies that moving the
// last symbol of a right-nested bracket to position j equals the stated
// signed sum over reversed-unshuffle permutations.
CheckReport check_unshuffle_rewrite(int n, int j, const FieldDesc& field);

// Number of Lyndon words of length d over an m-letter alphabet
// (necklace-counting formula); used as an independent dimension oracle.
std::int64_t witt_dimension(int m, int d);

}  // namespace postlie

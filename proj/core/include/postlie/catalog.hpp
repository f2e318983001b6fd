#pragma once

// Built-in example algebras: small structure-constant families over GF(2),
// GF(3) and GF(9), the derivation algebra of a truncated polynomial ring
// tensored back over that ring, and a truncated quasi-shuffle algebra on
// integer-weighted letters.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postlie/fdalgebra.hpp"
#include "postlie/scalars.hpp"

namespace postlie {

struct UnknownCatalogNameError : std::invalid_argument {
    explicit UnknownCatalogNameError(const std::string& what) : std::invalid_argument(what) {}
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> params;  // parameter names, in positional order
    std::string description;
};

// Every buildable name with its parameter list.
std::vector<CatalogEntry> catalog_list();

// Build a named algebra.  `params` is positional and must match the entry's
// parameter count; `field` overrides the default coefficient field (it must
// have the right characteristic) and is rejected for entries with a fixed
// field.  Parameters are taken in the resulting field.
FdAlgebra catalog_build(const std::string& name, const std::vector<Scalar>& params,
                        const std::optional<FieldDesc>& field = std::nullopt);

// Basis of the restricted derivations of the dim-3 / p = 2 catalog algebra,
// as matrices in its basis.
std::vector<Mat> dim3_p2_restricted_derivations(const FieldDesc& F);

// Truncated quasi-shuffle algebra: basis all nonempty words in letters
// z_1..z_N (letter z_i has weight i) of total weight <= N; letters multiply
// by z_i . z_j = z_{i+j}; anything of weight > N is cut to zero.  The three
// products (and their sum, the full product *) are tabulated on the basis.
struct QuasiShuffle {
    FieldDesc field;
    int weight_cap = 0;
    std::vector<std::vector<int>> words;  // basis, letters as positive ints
    std::vector<std::vector<Vec>> prec, succ, dot, star;
    // Carrier with the commutator bracket of "." and x |> y = y prec x - x succ y.
    FdAlgebra algebra;

    Vec mul(const std::vector<std::vector<Vec>>& table, const Vec& x, const Vec& y) const;
    Vec power(const std::vector<std::vector<Vec>>& table, const Vec& x, int e) const;
    std::string word_name(std::size_t i) const { return algebra.basis[i]; }
};

QuasiShuffle make_quasi_shuffle(const FieldDesc& F, int weight_cap);

// The six defining axioms, exhaustively on basis triples.
CheckReport quasi_shuffle_axioms(const QuasiShuffle& Q);
// The six-item checker with the p-th *-power and the p-th .-power as the two
// p-maps.
CheckReport quasi_shuffle_restricted_postlie_check(const QuasiShuffle& Q, std::uint64_t seed,
                                                   int samples = 100);

}  // namespace postlie

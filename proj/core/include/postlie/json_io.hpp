#pragma once

// JSON algebra files.  Layout:
//
//   {
//     "field":   {"p": 3, "modulus": [1, 0, 1]},   // modulus leading-to-constant,
//                                                  // omitted for prime fields
//     "dim":     3,
//     "basis":   ["e1", "e2", "e3"],
//     "bracket": [[0, 1, [[0],[0],[1]]], ...],     // sparse triples [i, j, value]
//     "pmap":    [[0, [[0],[0],[1]]], ...],        // sparse pairs  [i, value]
//     "postlie": [[0, 0, [[0],[0],[1]]], ...],
//     "maps":    {"d": [[...], ...], ...}          // optional named matrices,
//                                                  // row-major
//   }
//
// A value is a coordinate vector of length dim; every scalar is a list of
// base-field digits of length equal to the extension degree, constant term
// last.  Malformed documents raise AlgebraFileError.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "postlie/fdalgebra.hpp"
#include "postlie/report.hpp"

namespace postlie {

struct AlgebraFileError : std::runtime_error {
    explicit AlgebraFileError(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraFile {
    FdAlgebra algebra;
    std::map<std::string, Mat> maps;
};

AlgebraFile load_algebra_file(const std::string& path);
AlgebraFile parse_algebra_json(const std::string& text);
std::string algebra_to_json(const FdAlgebra& A, const std::map<std::string, Mat>& maps = {});
void save_algebra_file(const std::string& path, const FdAlgebra& A,
                       const std::map<std::string, Mat>& maps = {});

// CheckReport as a JSON array of {"axiom", "status", "witness"?, "seed"}.
std::string report_to_json(const CheckReport& rep);

}  // namespace postlie

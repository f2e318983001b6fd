#pragma once

// Planar rooted trees, ordered forests, and the envelope of the free
// one-generator post-Lie algebra.
//
// A tree is stored as its canonical nested-parentheses serialization:
// "()" is a single node, "(()())" a root with two leaf children; sibling
// order is significant.  A forest is an ordered word of trees (the empty
// forest is the envelope unit), and an envelope element is a finite linear
// combination of forests.
//
// Grafting t1 |> t2 attaches t1 as the new leftmost child of the root of t2.
// The product on the envelope is concatenation of forests; the coproduct is
// the unshuffle coproduct for which trees are primitive.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "postlie/scalars.hpp"

namespace postlie {

using Tree = std::string;
using Forest = std::vector<Tree>;
using EnvElt = std::map<Forest, Scalar>;

inline Tree leaf() { return "()"; }
bool is_valid_tree(const Tree& t);
int node_count(const Tree& t);
int node_count(const Forest& f);
std::string forest_to_string(const Forest& f);
Forest parse_forest(const std::string& s);

// t1 attached as the leftmost child of the root of t2.
Tree graft(const Tree& t1, const Tree& t2);

// Root with n-1 leaf children (n = 1 gives a single node); equals the n-th
// bullet power of the generator under root grafting.
Tree corolla(int n);
bool is_corolla(const Tree& t);

class Envelope {
  public:
    explicit Envelope(FieldDesc field) : field_(std::move(field)) {}

    const FieldDesc& field() const { return field_; }

    EnvElt zero() const { return {}; }
    EnvElt one() const;
    EnvElt from_tree(const Tree& t) const;
    EnvElt from_forest(const Forest& f) const;

    EnvElt add(const EnvElt& a, const EnvElt& b) const;
    EnvElt sub(const EnvElt& a, const EnvElt& b) const;
    EnvElt scale(const Scalar& c, const EnvElt& a) const;
    // Concatenation product.
    EnvElt mul(const EnvElt& a, const EnvElt& b) const;

    // The extension of root grafting to the envelope.
    EnvElt triangle(const EnvElt& e, const EnvElt& f) const;
    // E (1) (E (2) |> F), associative with unit 1.
    EnvElt star(const EnvElt& e, const EnvElt& f) const;
    EnvElt star_power(const EnvElt& e, int n) const;

    // Unshuffle coproduct, as a combination of forest pairs.
    std::map<std::pair<Forest, Forest>, Scalar> coproduct(const EnvElt& e) const;
    // Delta(e) - e x 1 - 1 x e vanishes.
    bool is_primitive(const EnvElt& e) const;

    // n-th bullet power of the generator, as an envelope element.
    EnvElt bullet_power(int n) const;
    // Sum over corolla forests with n nodes, with the closed-form
    // multiplicities n!/prod(...) reduced into the field.
    EnvElt corolla_star_expansion(int n) const;
    // x^{star p} - x^p - x^{bullet p} for the generator x.
    EnvElt L_of_x(int p) const;

    std::string to_string(const EnvElt& e) const;

  private:
    FieldDesc field_;
};

// Exact integer multiplicity of a corolla forest in the closed formula:
// n! / ((l_k-1)!...(l_1-1)! (l_1+...+l_k)(l_1+...+l_{k-1})...l_1),
// where l_i is the node count of the i-th corolla.
std::int64_t corolla_forest_multiplicity(const std::vector<int>& parts);

// All bijective labelings of a corolla forest by {1..n} that decrease along
// the constraint order: within a corolla the root is above its leaves and
// the leaves are totally ordered (rightmost smallest); the root of the i-th
// corolla is above every node of corollas 1..i.  Each labeling is returned
// as the vector of labels in node order (corollas left to right, within a
// corolla the root first and then its leaves left to right).
std::vector<std::vector<int>> enumerate_linearizations(const Forest& corollas);

}  // namespace postlie

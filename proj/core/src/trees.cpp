#include "postlie/trees.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "postlie/perms.hpp"

namespace postlie {

namespace {

void env_add_term(const FieldDesc& F, EnvElt& e, const Forest& f, const Scalar& c) {
    if (F.is_zero(c)) return;
    auto [it, inserted] = e.try_emplace(f, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) e.erase(it);
    }
}

}  // namespace

bool is_valid_tree(const Tree& t) {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        depth += t[i] == '(' ? 1 : -1;
        if (depth < 0) return false;
        if (depth == 0 && i + 1 != t.size()) return false;
    }
    return depth == 0;
}

int node_count(const Tree& t) {
    return static_cast<int>(std::count(t.begin(), t.end(), '('));
}

int node_count(const Forest& f) {
    int n = 0;
    for (const auto& t : f) n += node_count(t);
    return n;
}

std::string forest_to_string(const Forest& f) {
    std::string out;
    for (const auto& t : f) out += t;
    return out.empty() ? "1" : out;
}

Forest parse_forest(const std::string& s) {
    Forest f;
    if (s == "1" || s.empty()) return f;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else
            throw std::invalid_argument("forest string must contain only parentheses");
        if (depth < 0) throw std::invalid_argument("unbalanced forest string");
        if (depth == 0) {
            f.push_back(s.substr(start, i + 1 - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced forest string");
    return f;
}

Tree graft(const Tree& t1, const Tree& t2) { return "(" + t1 + t2.substr(1); }

Tree corolla(int n) {
    if (n < 1) throw std::out_of_range("corolla: need n >= 1");
    std::string t = "(";
    for (int i = 1; i < n; ++i) t += "()";
    return t + ")";
}

bool is_corolla(const Tree& t) { return t == corolla(node_count(t)); }

EnvElt Envelope::one() const { return {{Forest{}, field_.one()}}; }

EnvElt Envelope::from_tree(const Tree& t) const { return {{Forest{t}, field_.one()}}; }

EnvElt Envelope::from_forest(const Forest& f) const { return {{f, field_.one()}}; }

EnvElt Envelope::add(const EnvElt& a, const EnvElt& b) const {
    EnvElt out = a;
    for (const auto& [f, c] : b) env_add_term(field_, out, f, c);
    return out;
}

EnvElt Envelope::sub(const EnvElt& a, const EnvElt& b) const {
    EnvElt out = a;
    for (const auto& [f, c] : b) env_add_term(field_, out, f, field_.neg(c));
    return out;
}

EnvElt Envelope::scale(const Scalar& c, const EnvElt& a) const {
    EnvElt out;
    for (const auto& [f, coeff] : a) env_add_term(field_, out, f, field_.mul(c, coeff));
    return out;
}

EnvElt Envelope::mul(const EnvElt& a, const EnvElt& b) const {
    EnvElt out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b) {
            Forest f = fa;
            f.insert(f.end(), fb.begin(), fb.end());
            env_add_term(field_, out, f, field_.mul(ca, cb));
        }
    return out;
}

namespace {

// t |> f: Leibniz rule over the trees of f (trees are primitive, so the
// single tree t lands in exactly one factor); empty f gives 0.
EnvElt tree_triangle_forest(const FieldDesc& F, const Tree& t, const Forest& f) {
    EnvElt out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Forest g = f;
        g[i] = graft(t, f[i]);
        env_add_term(F, out, g, F.one());
    }
    return out;
}

EnvElt tree_triangle_env(const Envelope& env, const Tree& t, const EnvElt& e) {
    EnvElt out;
    for (const auto& [f, c] : e)
        out = env.add(out, env.scale(c, tree_triangle_forest(env.field(), t, f)));
    return out;
}

// W |> f for forests, by the recursion (t W') |> f = t |> (W' |> f)
// - (t |> W') |> f.  The left operand loses a tree in the second term, so
// the recursion terminates on the tree count of W.
EnvElt forest_triangle_forest(const Envelope& env, const Forest& w, const Forest& f) {
    if (w.empty()) return env.from_forest(f);
    const Tree t = w.front();
    const Forest rest(w.begin() + 1, w.end());

    const EnvElt inner = forest_triangle_forest(env, rest, f);
    EnvElt out = tree_triangle_env(env, t, inner);

    const EnvElt t_into_rest = tree_triangle_env(env, t, env.from_forest(rest));
    for (const auto& [g, c] : t_into_rest) {
        const EnvElt part = forest_triangle_forest(env, g, f);
        out = env.sub(out, env.scale(c, part));
    }
    return out;
}

}  // namespace

EnvElt Envelope::triangle(const EnvElt& e, const EnvElt& f) const {
    EnvElt out;
    for (const auto& [we, ce] : e)
        for (const auto& [wf, cf] : f) {
            const EnvElt part = forest_triangle_forest(*this, we, wf);
            out = add(out, scale(field_.mul(ce, cf), part));
        }
    return out;
}

EnvElt Envelope::star(const EnvElt& e, const EnvElt& f) const {
    // E star F = E(1) (E(2) |> F) with the unshuffle coproduct: sum over
    // complementary subwords of each forest of E.
    EnvElt out;
    for (const auto& [we, ce] : e) {
        const std::size_t n = we.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Forest left, right;
            for (std::size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? left : right).push_back(we[i]);
            for (const auto& [wf, cf] : f) {
                EnvElt part = forest_triangle_forest(*this, right, wf);
                Forest prefix = left;
                EnvElt shifted;
                for (const auto& [g, c] : part) {
                    Forest whole = prefix;
                    whole.insert(whole.end(), g.begin(), g.end());
                    env_add_term(field_, shifted, whole, c);
                }
                out = add(out, scale(field_.mul(ce, cf), shifted));
            }
        }
    }
    return out;
}

EnvElt Envelope::star_power(const EnvElt& e, int n) const {
    if (n < 1) throw std::out_of_range("star_power: need n >= 1");
    EnvElt out = e;
    for (int i = 1; i < n; ++i) out = star(out, e);
    return out;
}

std::map<std::pair<Forest, Forest>, Scalar> Envelope::coproduct(const EnvElt& e) const {
    std::map<std::pair<Forest, Forest>, Scalar> out;
    for (const auto& [f, c] : e) {
        const std::size_t n = f.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Forest left, right;
            for (std::size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? left : right).push_back(f[i]);
            auto key = std::make_pair(std::move(left), std::move(right));
            auto [it, inserted] = out.try_emplace(key, c);
            if (!inserted) {
                it->second = field_.add(it->second, c);
                if (field_.is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

bool Envelope::is_primitive(const EnvElt& e) const {
    auto delta = coproduct(e);
    for (const auto& [f, c] : e) {
        for (const auto& side : {std::make_pair(f, Forest{}), std::make_pair(Forest{}, f)}) {
            auto it = delta.find(side);
            if (it == delta.end()) {
                delta[side] = field_.neg(c);
            } else {
                it->second = field_.sub(it->second, c);
                if (field_.is_zero(it->second)) delta.erase(it);
            }
        }
    }
    return delta.empty();
}

EnvElt Envelope::bullet_power(int n) const { return from_tree(corolla(n)); }

EnvElt Envelope::corolla_star_expansion(int n) const {
    if (n < 1 || n > 7) throw std::out_of_range("corolla_star_expansion: need 1 <= n <= 7");
    EnvElt out;
    for (int parts = 1; parts <= n; ++parts) {
        for (const auto& comp : compositions(n, parts)) {
            Forest f;
            for (const int part : comp) f.push_back(corolla(part));
            env_add_term(field_, out, f, field_.from_int(corolla_forest_multiplicity(comp)));
        }
    }
    return out;
}

EnvElt Envelope::L_of_x(int p) const {
    if (p != 2 && p != 3 && p != 5) throw std::out_of_range("L_of_x: need p in {2,3,5}");
    if (static_cast<int>(field_.characteristic()) != p)
        throw std::invalid_argument("L_of_x: field characteristic must equal p");
    const EnvElt x = from_tree(leaf());
    EnvElt out = star_power(x, p);
    out = sub(out, from_forest(Forest(p, leaf())));
    return sub(out, bullet_power(p));
}

std::string Envelope::to_string(const EnvElt& e) const {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [f, c] : e) {
        if (!out.empty()) out += " + ";
        out += field_.to_string(c) + "*" + forest_to_string(f);
    }
    return out;
}

std::int64_t corolla_forest_multiplicity(const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::int64_t denom = 1;
    int partial = 0;
    for (const int part : parts) {
        denom *= factorial(part - 1);
        partial += part;
        denom *= partial;
    }
    const std::int64_t numer = factorial(n);
    if (numer % denom != 0)
        throw std::logic_error("corolla multiplicity is not an integer");
    return numer / denom;
}

std::vector<std::vector<int>> enumerate_linearizations(const Forest& corollas) {
    for (const auto& t : corollas)
        if (!is_corolla(t)) throw std::invalid_argument("forest contains a non-corolla tree");

    // Node order: corollas left to right; within a corolla the root first,
    // then leaves left to right.
    const int n = node_count(corollas);
    std::vector<std::pair<int, int>> above;  // (a, b): label(a) > label(b)
    std::vector<int> root_of;                // node index of each corolla root
    int base = 0;
    for (const auto& t : corollas) {
        const int sz = node_count(t);
        const int root = base;
        // root above every node of the corollas so far, including itself
        for (int b = 0; b < root; ++b) above.emplace_back(root, b);
        for (int leafi = 1; leafi < sz; ++leafi) {
            above.emplace_back(root, root + leafi);
            // leaves decrease left to right (rightmost smallest)
            if (leafi > 1) above.emplace_back(root + leafi - 1, root + leafi);
        }
        root_of.push_back(root);
        base += sz;
    }

    std::vector<std::vector<int>> out;
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    do {
        bool ok = true;
        for (const auto& [a, b] : above)
            if (labels[a] < labels[b]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

}  // namespace postlie

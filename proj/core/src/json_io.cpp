#include "postlie/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace postlie {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw AlgebraFileError(what); }

Scalar scalar_from_json(const FieldDesc& F, const json& j) {
    if (!j.is_array() || j.size() != F.degree()) bad("scalar must be a digit list of length " + std::to_string(F.degree()));
    // Digits are written constant term last.
    std::vector<std::int64_t> coeffs(F.degree());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) bad("scalar digits must be integers");
        coeffs[F.degree() - 1 - i] = j[i].get<std::int64_t>();
    }
    return F.from_coeffs(coeffs);
}

json scalar_to_json(const FieldDesc& F, const Scalar& s) {
    json out = json::array();
    for (int i = static_cast<int>(F.degree()) - 1; i >= 0; --i)
        out.push_back(s.c[static_cast<std::size_t>(i)]);
    return out;
}

Vec vec_from_json(const FieldDesc& F, std::size_t dim, const json& j) {
    if (!j.is_array() || j.size() != dim) bad("value must be a coordinate list of length " + std::to_string(dim));
    Vec v(dim, Scalar{});
    for (std::size_t i = 0; i < dim; ++i) v[i] = scalar_from_json(F, j[i]);
    return v;
}

json vec_to_json(const FieldDesc& F, const Vec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(scalar_to_json(F, s));
    return out;
}

std::size_t index_from_json(const json& j, std::size_t dim, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        bad(std::string(what) + " index must be a nonnegative integer");
    auto i = j.get<std::uint64_t>();
    if (i >= dim) bad(std::string(what) + " index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("top level must be an object");
    if (!doc.contains("field") || !doc["field"].is_object()) bad("missing 'field' object");
    const json& f = doc["field"];
    if (!f.contains("p") || !f["p"].is_number_unsigned()) bad("field needs a prime 'p'");
    FieldDesc F;
    try {
        if (f.contains("modulus")) {
            std::vector<std::uint32_t> mod;
            for (const auto& c : f["modulus"]) {
                if (!c.is_number_integer()) bad("modulus coefficients must be integers");
                mod.push_back(c.get<std::uint32_t>());
            }
            F = FieldDesc::make(f["p"].get<std::uint32_t>(), mod);
        } else {
            F = FieldDesc::make(f["p"].get<std::uint32_t>());
        }
    } catch (const std::invalid_argument& e) {
        bad(std::string("bad field descriptor: ") + e.what());
    }

    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) bad("missing 'dim'");
    std::size_t dim = doc["dim"].get<std::size_t>();

    AlgebraFile out;
    FdAlgebra& A = out.algebra;
    A.field = F;
    A.dim = dim;
    if (doc.contains("basis")) {
        if (!doc["basis"].is_array() || doc["basis"].size() != dim)
            bad("'basis' must list exactly dim names");
        for (const auto& n : doc["basis"]) {
            if (!n.is_string()) bad("basis names must be strings");
            A.basis.push_back(n.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) A.basis.push_back("e" + std::to_string(i + 1));
    }

    A.bracket.assign(dim, std::vector<Vec>(dim, A.zero()));
    if (doc.contains("bracket")) {
        if (!doc["bracket"].is_array()) bad("'bracket' must be an array of triples");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& t : doc["bracket"]) {
            if (!t.is_array() || t.size() != 3) bad("bracket entries must be [i, j, value]");
            std::size_t i = index_from_json(t[0], dim, "bracket");
            std::size_t j = index_from_json(t[1], dim, "bracket");
            if (!seen.emplace(i, j).second)
                bad("duplicate bracket entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            A.bracket[i][j] = vec_from_json(F, dim, t[2]);
        }
    }

    if (doc.contains("pmap")) {
        if (!doc["pmap"].is_array()) bad("'pmap' must be an array of pairs");
        std::vector<Vec> pm(dim, A.zero());
        std::set<std::size_t> seen;
        for (const auto& t : doc["pmap"]) {
            if (!t.is_array() || t.size() != 2) bad("pmap entries must be [i, value]");
            std::size_t i = index_from_json(t[0], dim, "pmap");
            if (!seen.insert(i).second) bad("duplicate pmap entry " + std::to_string(i));
            pm[i] = vec_from_json(F, dim, t[1]);
        }
        A.pmap_basis = std::move(pm);
    }

    if (doc.contains("postlie")) {
        if (!doc["postlie"].is_array()) bad("'postlie' must be an array of triples");
        std::vector<std::vector<Vec>> tab(dim, std::vector<Vec>(dim, A.zero()));
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& t : doc["postlie"]) {
            if (!t.is_array() || t.size() != 3) bad("postlie entries must be [i, j, value]");
            std::size_t i = index_from_json(t[0], dim, "postlie");
            std::size_t j = index_from_json(t[1], dim, "postlie");
            if (!seen.emplace(i, j).second)
                bad("duplicate postlie entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            tab[i][j] = vec_from_json(F, dim, t[2]);
        }
        A.postlie = std::move(tab);
    }

    if (doc.contains("maps")) {
        if (!doc["maps"].is_object()) bad("'maps' must be an object of matrices");
        for (const auto& [name, m] : doc["maps"].items()) {
            if (!m.is_array() || m.empty()) bad("map '" + name + "' must be a nonempty row list");
            std::size_t rows = m.size();
            if (!m[0].is_array()) bad("map '" + name + "' rows must be lists");
            std::size_t cols = m[0].size();
            Mat M(rows, cols);
            for (std::size_t r = 0; r < rows; ++r) {
                if (!m[r].is_array() || m[r].size() != cols) bad("map '" + name + "' is ragged");
                for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = scalar_from_json(F, m[r][c]);
            }
            out.maps.emplace(name, std::move(M));
        }
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlgebraFileError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_json(buf.str());
}

std::string algebra_to_json(const FdAlgebra& A, const std::map<std::string, Mat>& maps) {
    const FieldDesc& F = A.field;
    json doc;
    doc["field"]["p"] = F.characteristic();
    if (F.degree() > 1) doc["field"]["modulus"] = F.modulus();
    doc["dim"] = A.dim;
    doc["basis"] = A.basis;
    json br = json::array();
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            if (!vec_is_zero(A.bracket[i][j]))
                br.push_back(json::array({i, j, vec_to_json(F, A.bracket[i][j])}));
    doc["bracket"] = br;
    if (A.pmap_basis) {
        json pm = json::array();
        for (std::size_t i = 0; i < A.dim; ++i)
            if (!vec_is_zero((*A.pmap_basis)[i]))
                pm.push_back(json::array({i, vec_to_json(F, (*A.pmap_basis)[i])}));
        doc["pmap"] = pm;
    }
    if (A.postlie) {
        json tab = json::array();
        for (std::size_t i = 0; i < A.dim; ++i)
            for (std::size_t j = 0; j < A.dim; ++j)
                if (!vec_is_zero((*A.postlie)[i][j]))
                    tab.push_back(json::array({i, j, vec_to_json(F, (*A.postlie)[i][j])}));
        doc["postlie"] = tab;
    }
    if (!maps.empty()) {
        json ms = json::object();
        for (const auto& [name, M] : maps) {
            json rows = json::array();
            for (std::size_t r = 0; r < M.rows; ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < M.cols; ++c) row.push_back(scalar_to_json(F, M.at(r, c)));
                rows.push_back(row);
            }
            ms[name] = rows;
        }
        doc["maps"] = ms;
    }
    return doc.dump(2) + "\n";
}

void save_algebra_file(const std::string& path, const FdAlgebra& A,
                       const std::map<std::string, Mat>& maps) {
    std::ofstream outf(path);
    if (!outf) throw AlgebraFileError("cannot write file: " + path);
    outf << algebra_to_json(A, maps);
}

std::string report_to_json(const CheckReport& rep) {
    json out = json::array();
    for (const CheckItem& item : rep.items) {
        json j;
        j["axiom"] = item.name;
        j["status"] = item.passed ? "pass" : "fail";
        if (!item.witness.empty()) j["witness"] = item.witness;
        j["seed"] = rep.seed;
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

}  // namespace postlie

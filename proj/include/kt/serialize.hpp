#pragma once

// Text and JSON forms of rings, matrices, modules, complexes and chain maps.
// Keys are sorted and polynomials are printed in the monomial order, so
// writing what was read reproduces a canonical file byte for byte.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kt/complex.hpp"
#include "kt/presented.hpp"

namespace kt::io {

using Json = nlohmann::json;

/// `p=<prime>; vars <name>:<weight> ...;` with weight 1 when omitted.
inline GradedPolyRing parse_ring(std::string_view text)
{
    std::string s(text);
    auto fail = [](const std::string& msg) -> GradedPolyRing { throw ValidationError(msg, "ring"); };
    auto semi = s.find(';');
    if (semi == std::string::npos) return fail("expected ';' after the characteristic");
    std::string head = s.substr(0, semi);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (head.rfind("p=", 0) != 0) return fail("expected 'p=<prime>'");
    unsigned long p = 0;
    try {
        std::size_t used = 0;
        p = std::stoul(head.substr(2), &used);
        if (used != head.size() - 2) return fail("bad characteristic '" + head.substr(2) + "'");
    } catch (const std::logic_error&) {
        return fail("bad characteristic '" + head.substr(2) + "'");
    }
    std::string rest = s.substr(semi + 1);
    auto end = rest.find(';');
    if (end == std::string::npos) return fail("expected ';' after the variables");
    if (rest.substr(end + 1).find_first_not_of(" \t\r\n") != std::string::npos) return fail("trailing text after the variables");
    std::istringstream in(rest.substr(0, end));
    std::string word;
    if (!(in >> word) || word != "vars") return fail("expected 'vars'");
    std::vector<std::string> names;
    std::vector<int> weights;
    while (in >> word) {
        auto colon = word.find(':');
        names.push_back(word.substr(0, colon));
        int w = 1;
        if (colon != std::string::npos) {
            try {
                std::size_t used = 0;
                w = std::stoi(word.substr(colon + 1), &used);
                if (used != word.size() - colon - 1) throw std::invalid_argument(word);
            } catch (const std::logic_error&) {
                return fail("bad weight in '" + word + "'");
            }
        }
        weights.push_back(w);
    }
    return GradedPolyRing(static_cast<Coeff>(p), names, weights);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& where)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what(), where);
    }
}

inline Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json twists_json(const GradedFreeModule& F) { return F.twists(); }

inline GradedFreeModule twists_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw ValidationError("twists must be a list of integers", where);
    std::vector<int> t;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ValidationError("twists must be a list of integers", where);
        t.push_back(v.get<int>());
    }
    return GradedFreeModule::from_twists(t);
}

inline Json rows_json(const GradedPolyRing& R, const GradedMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly::to_string(R, m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline GradedMatrix rows_from_json(const GradedPolyRing& R, const Json& rows, const GradedFreeModule& target, const GradedFreeModule& source, const std::string& where)
{
    if (!rows.is_array() || rows.size() != target.rank()) throw ValidationError("expected " + std::to_string(target.rank()) + " rows", where);
    GradedMatrix m(target, source);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || row.size() != source.rank())
            throw ValidationError("row " + std::to_string(i) + " must have " + std::to_string(source.rank()) + " entries", where);
        for (std::size_t j = 0; j < row.size(); ++j) {
            const Json& e = row[j];
            std::string text = e.is_string() ? e.get<std::string>() : e.is_number_integer() ? std::to_string(e.get<long long>()) : "";
            if (text.empty()) throw ValidationError("entries must be polynomial strings", where);
            try {
                m.at(i, j) = poly::parse(R, text);
            } catch (const ValidationError& err) {
                throw ValidationError(err.what(), where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            }
        }
    }
    m.validate(where);
    return m;
}

inline Json to_json(const GradedPolyRing& R, const GradedMatrix& m)
{
    return Json{{"source_twists", twists_json(m.source())}, {"target_twists", twists_json(m.target())}, {"rows", rows_json(R, m)}};
}

inline GradedMatrix matrix_from_json(const GradedPolyRing& R, const Json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("source_twists") || !j.contains("target_twists"))
        throw ValidationError("matrix needs source_twists, target_twists and rows", where);
    return rows_from_json(R, j["rows"], twists_from_json(j["target_twists"], where + ".target_twists"), twists_from_json(j["source_twists"], where + ".source_twists"),
                          where + ".rows");
}

inline Json to_json(const GradedPolyRing& R, const PresentedModule& M)
{
    return Json{{"relation_twists", twists_json(M.relations.source())}, {"relations", rows_json(R, M.relations)}, {"twists", twists_json(M.generators())}};
}

inline PresentedModule module_from_json(const GradedPolyRing& R, const Json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("twists")) throw ValidationError("module needs twists", where);
    GradedFreeModule G = twists_from_json(j["twists"], where + ".twists");
    GradedFreeModule src = j.contains("relation_twists") ? twists_from_json(j["relation_twists"], where + ".relation_twists") : GradedFreeModule{};
    GradedMatrix rel(G, src);
    if (j.contains("relations")) rel = rows_from_json(R, j["relations"], G, src, where + ".relations");
    else if (src.rank() > 0) throw ValidationError("relation_twists given without relations", where);
    PresentedModule M(rel);
    M.validate(where);
    return M;
}

inline Json to_json(const GradedPolyRing& R, const FreeComplex& X)
{
    Json tw = Json::object(), maps = Json::object();
    for (const auto& [n, F] : X.terms()) tw[std::to_string(n)] = twists_json(F);
    for (const auto& [n, d] : X.diffs()) maps[std::to_string(n)] = rows_json(R, d);
    return Json{{"maps", maps}, {"twists", tw}};
}

namespace detail {

inline int degree_key(const std::string& k, const std::string& where)
{
    try {
        std::size_t used = 0;
        int n = std::stoi(k, &used);
        if (used == k.size()) return n;
    } catch (const std::logic_error&) {
    }
    throw ValidationError("homological degree keys must be integers, got '" + k + "'", where);
}

} // namespace detail

inline FreeComplex complex_from_json(const GradedPolyRing& R, const Json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("twists")) throw ValidationError("complex needs twists", where);
    std::map<int, GradedFreeModule> terms;
    std::map<int, GradedMatrix> diffs;
    for (const auto& [k, v] : j["twists"].items()) terms[detail::degree_key(k, where)] = twists_from_json(v, where + ".twists." + k);
    auto term = [&](int n) { return terms.count(n) ? terms[n] : GradedFreeModule{}; };
    if (j.contains("maps"))
        for (const auto& [k, v] : j["maps"].items()) {
            int n = detail::degree_key(k, where);
            diffs[n] = rows_from_json(R, v, term(n - 1), term(n), where + ".maps." + k);
        }
    try {
        return FreeComplex(R, terms, diffs);
    } catch (const ValidationError& e) {
        throw ValidationError(e.what(), where + ": " + e.where());
    }
}

/// Free complex format plus `relation_twists` and `relations` per degree.
inline Json to_json(const GradedPolyRing& R, const PresentedComplex& X)
{
    Json tw = Json::object(), maps = Json::object(), rt = Json::object(), rel = Json::object();
    for (const auto& [n, M] : X.terms) {
        tw[std::to_string(n)] = twists_json(M.generators());
        if (M.relations.cols() > 0) {
            rt[std::to_string(n)] = twists_json(M.relations.source());
            rel[std::to_string(n)] = rows_json(R, M.relations);
        }
    }
    for (const auto& [n, d] : X.maps)
        if (!d.is_zero()) maps[std::to_string(n)] = rows_json(R, d);
    Json out{{"maps", maps}, {"twists", tw}};
    if (!rel.empty()) {
        out["relation_twists"] = rt;
        out["relations"] = rel;
    }
    return out;
}

inline PresentedComplex presented_complex_from_json(const GradedPolyRing& R, const Json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("twists")) throw ValidationError("complex needs twists", where);
    PresentedComplex X;
    for (const auto& [k, v] : j["twists"].items()) {
        int n = detail::degree_key(k, where);
        GradedFreeModule G = twists_from_json(v, where + ".twists." + k);
        GradedFreeModule src;
        GradedMatrix rel(G, src);
        if (j.contains("relations") && j["relations"].contains(k)) {
            if (!j.contains("relation_twists") || !j["relation_twists"].contains(k)) throw ValidationError("relations without relation_twists", where + ".relations." + k);
            src = twists_from_json(j["relation_twists"][k], where + ".relation_twists." + k);
            rel = rows_from_json(R, j["relations"][k], G, src, where + ".relations." + k);
        }
        if (G.rank() > 0) X.terms[n] = PresentedModule(rel);
    }
    if (j.contains("maps"))
        for (const auto& [k, v] : j["maps"].items()) {
            int n = detail::degree_key(k, where);
            const PresentedModule* s = X.term(n);
            const PresentedModule* t = X.term(n - 1);
            X.maps[n] = rows_from_json(R, v, t ? t->generators() : GradedFreeModule{}, s ? s->generators() : GradedFreeModule{}, where + ".maps." + k);
        }
    try {
        X.validate(R);
    } catch (const ValidationError& e) {
        throw ValidationError(e.what(), where + ": " + e.where());
    }
    return X;
}

inline Json to_json(const GradedPolyRing& R, const ChainMap& f)
{
    Json maps = Json::object();
    for (const auto& [n, m] : f.maps())
        if (!m.is_zero()) maps[std::to_string(n)] = rows_json(R, m);
    return Json{{"maps", maps}};
}

inline ChainMap chain_map_from_json(const GradedPolyRing& R, const Json& j, const FreeComplex& source, const FreeComplex& target, const std::string& where)
{
    if (!j.is_object() || !j.contains("maps")) throw ValidationError("chain map needs maps", where);
    std::map<int, GradedMatrix> maps;
    for (const auto& [k, v] : j["maps"].items()) {
        int n = detail::degree_key(k, where);
        maps[n] = rows_from_json(R, v, target.term(n), source.term(n), where + ".maps." + k);
    }
    try {
        return ChainMap(R, source, target, maps);
    } catch (const ValidationError& e) {
        throw ValidationError(e.what(), where + ": " + e.where());
    }
}

} // namespace kt::io

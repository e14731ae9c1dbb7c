#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric::io {

namespace {

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) config_fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

std::uint32_t require_uint(const json& j, const std::string& where) {
    const std::int64_t v = require_int(j, where);
    if (v < 0) config_fail(where, "expected a nonnegative integer");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"prim_poly", f.prim_poly()}};
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object()) config_fail("field", "expected an object {p, m, prim_poly?}");
    if (!j.contains("p") || !j.contains("m")) config_fail("field", "missing p or m");
    const std::uint32_t p = require_uint(j.at("p"), "field.p");
    const std::uint32_t m = require_uint(j.at("m"), "field.m");
    std::optional<std::vector<std::uint32_t>> poly;
    if (j.contains("prim_poly")) {
        if (!j.at("prim_poly").is_array()) config_fail("field.prim_poly", "expected an array");
        std::vector<std::uint32_t> coeffs;
        for (std::size_t i = 0; i < j.at("prim_poly").size(); ++i)
            coeffs.push_back(require_uint(j.at("prim_poly")[i],
                                          "field.prim_poly[" + std::to_string(i) + "]"));
        poly = std::move(coeffs);
    }
    try {
        return build_field(p, m, std::move(poly));
    } catch (const Error& e) {
        config_fail("field", e.what());
    }
}

LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object()) config_fail("polytope", "expected {vertices: [[x,y],...]} or {simplex: a}");
    if (j.contains("simplex")) {
        const std::int64_t a = require_int(j.at("simplex"), "polytope.simplex");
        if (a < 0) config_fail("polytope.simplex", "leg must be nonnegative");
        return LatticePolytope::simplex(a);
    }
    if (!j.contains("vertices")) config_fail("polytope", "missing vertices or simplex");
    const json& vs = j.at("vertices");
    if (!vs.is_array() || vs.empty()) config_fail("polytope.vertices", "expected a nonempty array");
    std::vector<Vertex> verts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "polytope.vertices[" + std::to_string(i) + "]";
        if (!vs[i].is_array() || vs[i].size() != 2) config_fail(where, "expected [x, y]");
        verts.push_back({require_int(vs[i][0], where), require_int(vs[i][1], where)});
    }
    return LatticePolytope(std::move(verts));
}

json polytope_to_json(const LatticePolytope& P) {
    json vs = json::array();
    for (const auto& v : P.vertices()) vs.push_back({v[0], v[1]});
    return json{{"vertices", vs}};
}

json exponents_to_json(const ExponentSet& U) {
    json pts = json::array();
    for (const auto& u : U.points()) pts.push_back(u);
    return pts;
}

ExponentSet exponents_from_json(const json& j) {
    if (!j.is_array() || j.empty()) config_fail("exponents", "expected a nonempty array of tuples");
    std::vector<Exponent> pts;
    std::size_t r = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "exponents[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].empty()) config_fail(where, "expected a tuple");
        Exponent e;
        for (const auto& c : j[i]) e.push_back(require_int(c, where));
        if (i == 0)
            r = e.size();
        else if (e.size() != r)
            config_fail(where, "tuple arity differs from the first tuple");
        pts.push_back(std::move(e));
    }
    return ExponentSet(r, std::move(pts));
}

json descriptor(const ToricCode& C) {
    json d{{"field", field_to_json(*C.field)},
           {"n", C.n()},
           {"k", C.k},
           {"exponents", exponents_to_json(C.exponents)}};
    if (C.polytope) d["polytope"] = polytope_to_json(*C.polytope);
    return d;
}

ToricCode code_from_descriptor(const json& j) {
    if (!j.is_object()) config_fail("descriptor", "expected an object");
    if (!j.contains("field") || !j.contains("exponents"))
        config_fail("descriptor", "missing field or exponents");
    FieldPtr f = field_from_json(j.at("field"));
    ToricCode C = build_code(f, exponents_from_json(j.at("exponents")));
    if (j.contains("n") && require_uint(j.at("n"), "descriptor.n") != C.n())
        config_fail("descriptor.n", "does not match the rebuilt code");
    if (j.contains("k") && require_uint(j.at("k"), "descriptor.k") != C.k)
        config_fail("descriptor.k", "does not match the rebuilt code");
    return C;
}

std::vector<std::vector<std::uint32_t>> read_word_file(const std::filesystem::path& path,
                                                       const Field& field,
                                                       std::size_t expected_len) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open word file: " + path.string());
    std::vector<std::vector<std::uint32_t>> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<std::uint32_t> w;
        std::int64_t v;
        while (ss >> v) {
            if (v < 0 || v >= static_cast<std::int64_t>(field.q()))
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": element value out of range for GF(" +
                                  std::to_string(field.q()) + ")");
            w.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ss.eof())
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": not an integer");
        if (w.size() != expected_len)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(expected_len) + " values, got " +
                              std::to_string(w.size()));
        words.push_back(std::move(w));
    }
    return words;
}

void write_word_file(const std::filesystem::path& path,
                     const std::vector<std::vector<std::uint32_t>>& words) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write word file: " + path.string());
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << w[i];
        }
        out << '\n';
    }
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    out << text;
}

}  // namespace toric::io

#include "thetaquartic/io.hpp"

#include <fstream>
#include <sstream>

namespace thetaquartic::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const Json& j) {
    if (!j.is_number()) malformed("expected a number, got " + j.dump());
    return j.get<double>();
}

Characteristic characteristic_from_json(const Json& j) {
    if (!j.is_string()) malformed("characteristic must be a string like \"101|010\"");
    return Characteristic::parse(j.get<std::string>());
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) malformed("complex numbers are [re, im] arrays, got " + j.dump());
    return {number(j[0]), number(j[1])};
}

Json vector_to_json(const CVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
    return out;
}

CVector vector_from_json(const Json& j) {
    if (!j.is_array()) malformed("expected an array of [re, im] pairs");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    return v;
}

Json period_matrix_to_json(const SiegelPoint& tau) {
    Json rows = Json::array();
    for (int i = 0; i < tau.genus(); ++i) rows.push_back(vector_to_json(tau.tau().row(i).transpose()));
    return Json{{"genus", tau.genus()}, {"tau", rows}};
}

SiegelPoint period_matrix_from_json(const Json& j) {
    const Json& genus_field = member(j, "genus");
    if (!genus_field.is_number_integer()) malformed("\"genus\" must be an integer");
    const int genus = genus_field.get<int>();
    if (genus < 1 || genus > kMaxGenus) malformed("unsupported genus " + std::to_string(genus));
    const Json& rows = member(j, "tau");
    if (!rows.is_array() || static_cast<int>(rows.size()) != genus) malformed("\"tau\" must have genus rows");
    CMatrix tau(genus, genus);
    for (int i = 0; i < genus; ++i) {
        const CVector row = vector_from_json(rows[static_cast<std::size_t>(i)]);
        if (row.size() != genus) malformed("\"tau\" row " + std::to_string(i) + " has the wrong length");
        tau.row(i) = row.transpose();
    }
    return validate_siegel(tau);
}

Json bitangents_to_json(const BitangentSet& set) {
    Json lines = Json::array();
    for (const auto& line : set.lines())
        lines.push_back(Json{{"char", line.ch.to_string()}, {"coords", vector_to_json(line.coords)}});
    return Json{{"genus", 3}, {"bitangents", lines}};
}

BitangentSet bitangents_from_json(const Json& j) {
    const Json& genus_field = member(j, "genus");
    if (!genus_field.is_number_integer() || genus_field.get<int>() != 3) malformed("bitangent sets are genus 3");
    const Json& entries = member(j, "bitangents");
    if (!entries.is_array()) malformed("\"bitangents\" must be an array");
    std::vector<BitangentLine> lines;
    for (const auto& e : entries) {
        BitangentLine line{characteristic_from_json(member(e, "char")), vector_from_json(member(e, "coords"))};
        if (line.coords.size() != 3) malformed("bitangent " + line.ch.to_string() + " needs 3 coordinates");
        lines.push_back(std::move(line));
    }
    return BitangentSet(std::move(lines));
}

Json fingerprint_to_json(const Fingerprint& fp) {
    Json quotients = Json::array();
    for (const auto& [m, q] : fp.quotients)
        quotients.push_back(Json{{"char", m.to_string()}, {"value", complex_to_json(q)}});
    return Json{{"reference", fp.reference.to_string()}, {"quotients", quotients}};
}

Fingerprint fingerprint_from_json(const Json& j) {
    Fingerprint fp;
    fp.reference = characteristic_from_json(member(j, "reference"));
    const Json& entries = member(j, "quotients");
    if (!entries.is_array()) malformed("\"quotients\" must be an array");
    for (const auto& e : entries) {
        const Characteristic m = characteristic_from_json(member(e, "char"));
        if (!fp.quotients.emplace(m, complex_from_json(member(e, "value"))).second)
            malformed("duplicate fingerprint entry " + m.to_string());
    }
    if (!fp.quotients.contains(fp.reference)) malformed("fingerprint lacks its reference entry");
    return fp;
}

Json comparison_to_json(const CurveComparison& cmp) {
    Json devs = Json::array();
    for (const auto& [m, d] : cmp.deviations.deviations) devs.push_back(Json{{"char", m.to_string()}, {"deviation", d}});
    return Json{{"verdict", cmp.verdict == Verdict::Same ? "SAME" : "DIFFERENT"},
                {"max_deviation", cmp.deviations.max_deviation},
                {"tolerance", cmp.tolerance},
                {"deviations", devs}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

}  // namespace thetaquartic::io

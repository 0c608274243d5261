#include "srmdp/serialize.hpp"

#include <algorithm>
#include <cctype>

namespace srmdp {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::uint32_t parse_u32(const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw FormatError("expected an unsigned integer, got '" + tok + "'");
    try {
        const unsigned long v = std::stoul(tok);
        if (v > 0xffffffffUL) throw std::out_of_range(tok);
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw FormatError("coefficient out of range: '" + tok + "'");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = s.find(',', pos);
        out.push_back(strip(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

std::string element_to_string(const FieldElement& x) {
    const auto& c = x.coeffs();
    std::size_t len = c.size();
    while (len > 1 && c[len - 1] == 0) --len;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

FieldElement element_from_string(const FieldPtr& field, const std::string& raw) {
    const std::string s = strip(raw);
    if (s.empty()) throw FormatError("empty field element");
    if (s[0] == 'a') {
        if (field->primitivity() == Primitivity::verified_irreducible_only)
            throw FormatError("alpha-power notation requires a primitive alpha");
        if (s == "a") return field->alpha();
        if (s.size() < 3 || s[1] != '^')
            throw FormatError("bad alpha power: '" + s + "' (expected a or a^K)");
        const std::string digits = s.substr(2);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
                return std::isdigit(c);
            }))
            throw FormatError("bad alpha exponent: '" + digits + "'");
        return pow(field->alpha(), BigInt(digits));
    }
    const std::vector<std::string> toks = split_commas(s);
    if (toks.size() > field->degree())
        throw FormatError("element has more coefficients than the field degree");
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(toks.size());
    for (const std::string& t : toks) coeffs.push_back(parse_u32(t));
    return field->from_coeffs(coeffs);
}

std::string coeffs_to_string(const std::vector<std::uint32_t>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs[i]);
    }
    return s;
}

std::vector<std::uint32_t> coeffs_from_string(const std::string& s) {
    const std::vector<std::string> toks = split_commas(strip(s));
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(toks.size());
    for (const std::string& t : toks) coeffs.push_back(parse_u32(t));
    return coeffs;
}

Json field_to_json(const Field& f) {
    return Json{{"p", f.p()},
                {"N", f.degree()},
                {"modulus", coeffs_to_string(f.modulus())},
                {"primitivity", to_string(f.primitivity())}};
}

FieldPtr field_from_json(const Json& j, std::uint64_t factor_budget) {
    if (!j.is_object() || !j.contains("p") || !j.contains("modulus"))
        throw FormatError("field spec requires p and modulus");
    const auto p = j.at("p").get<std::uint32_t>();
    const auto coeffs = coeffs_from_string(j.at("modulus").get<std::string>());
    bool require_primitive = true;
    if (j.contains("primitivity"))
        require_primitive =
            j.at("primitivity").get<std::string>() != to_string(Primitivity::verified_irreducible_only);
    FieldPtr f = Field::make(p, coeffs, require_primitive, factor_budget);
    if (j.contains("N") && j.at("N").get<std::size_t>() != f->degree())
        throw FormatError("field spec: N disagrees with the modulus degree");
    return f;
}

Json params_to_json(const CodeParams& p) {
    return Json{{"n", p.n}, {"k", p.k},  {"delta", p.delta},
                {"M", p.M}, {"L", p.L},  {"nu", p.nu}};
}

CodeParams params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("delta"))
        throw FormatError("params require n, k, delta");
    CodeParams p(j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(),
                 j.at("delta").get<std::size_t>());
    for (const char* key : {"M", "L", "nu"}) {
        if (!j.contains(key)) continue;
        const auto v = j.at(key).get<std::size_t>();
        const std::size_t expect = key[0] == 'M' ? p.M : (key[0] == 'L' ? p.L : p.nu);
        if (v != expect)
            throw FormatError(std::string("params: stored ") + key + " disagrees with (n, k, delta)");
    }
    return p;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw FormatError("matrix requires rows, cols, entries");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows) throw FormatError("matrix entries: wrong row count");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!e[r].is_array() || e[r].size() != cols)
            throw FormatError("matrix entries: wrong column count in row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = element_from_string(field, e[r][c].get<std::string>());
    }
    return m;
}

Json poly_matrix_to_json(const PolyMatrix& m) {
    Json arr = Json::array();
    for (const Matrix& c : m.coeffs()) arr.push_back(matrix_to_json(c));
    return arr;
}

PolyMatrix poly_matrix_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array() || j.empty()) throw FormatError("polynomial matrix requires coefficients");
    std::vector<Matrix> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j) coeffs.push_back(matrix_from_json(c, field));
    return PolyMatrix(std::move(coeffs));
}

Json code_to_json(const ConvCode& code) {
    return Json{{"schema", 1},
                {"type", "convolutional-code"},
                {"params", params_to_json(code.params)},
                {"field", field_to_json(*code.field)},
                {"A", poly_matrix_to_json(code.A)},
                {"B", poly_matrix_to_json(code.B)}};
}

ConvCode code_from_json(const Json& j, std::uint64_t factor_budget) {
    if (!j.is_object()) throw FormatError("code: expected a JSON object");
    for (const char* key : {"params", "field", "A", "B"})
        if (!j.contains(key)) throw FormatError(std::string("code: missing ") + key);
    ConvCode code;
    code.params = params_from_json(j.at("params"));
    code.field = field_from_json(j.at("field"), factor_budget);
    code.A = poly_matrix_from_json(j.at("A"), code.field);
    code.B = poly_matrix_from_json(j.at("B"), code.field);
    validate_code(code);
    return code;
}

Json minor_index_to_json(const MinorIndex& idx) {
    Json rows = Json::array(), cols = Json::array();
    for (std::size_t r : idx.rows) rows.push_back(r + 1);
    for (std::size_t c : idx.cols) cols.push_back(c + 1);
    return Json{{"order", idx.order()}, {"rows", std::move(rows)}, {"cols", std::move(cols)}};
}

Json minor_witness_to_json(const MinorWitness& w) {
    Json j = minor_index_to_json(w.index);
    j["det"] = element_to_string(w.determinant);
    return j;
}

Json sr_report_to_json(const SuperregularReport& r) {
    Json witnesses = Json::array();
    for (const MinorWitness& w : r.witnesses) witnesses.push_back(minor_witness_to_json(w));
    return Json{{"verdict", to_string(r.verdict)},
                {"minors_checked", r.minors_checked},
                {"max_order_checked", r.max_order_checked},
                {"witnesses", std::move(witnesses)}};
}

Json distance_to_json(const DistanceResult& d, bool include_witness) {
    Json j{{"j", d.j},
           {"distance", d.distance},
           {"bound_met", d.bound_met},
           {"search_space", d.search_space.str()}};
    if (include_witness) {
        Json w = Json::array();
        for (const FieldElement& x : d.witness) w.push_back(element_to_string(x));
        j["witness"] = std::move(w);
    }
    return j;
}

Json profile_to_json(const ColumnDistanceProfile& p, bool include_witness) {
    Json arr = Json::array();
    for (const DistanceResult& d : p.per_j) arr.push_back(distance_to_json(d, include_witness));
    return Json{{"distances", std::move(arr)}, {"mdp", p.mdp}};
}

Json min_field_to_json(const MinFieldResult& r) {
    Json attempts = Json::array();
    for (const MinFieldAttempt& a : r.attempts) {
        Json aj{{"N", a.N}, {"verdict", to_string(a.verdict)}};
        if (a.witness) aj["witness"] = minor_witness_to_json(*a.witness);
        attempts.push_back(std::move(aj));
    }
    Json j{{"found", r.found_N.has_value()}, {"attempts", std::move(attempts)}};
    if (r.found_N) {
        j["N"] = *r.found_N;
        j["report"] = sr_report_to_json(r.report);
    }
    return j;
}

Json unique_max_to_json(const UniqueMaxResult& r) {
    Json j{{"ok", r.ok}, {"minors_checked", r.minors_checked}};
    if (r.violation) j["violation"] = minor_index_to_json(*r.violation);
    return j;
}

}  // namespace srmdp

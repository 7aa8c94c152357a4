#include "hsub/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hsub/errors.hpp"

namespace hsub {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("invalid JSON");
    return j;
}

void require_keys(const json& j, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw FormatError("expected a JSON object");
    for (const char* k : keys)
        if (!j.contains(k)) throw FormatError(std::string("missing key '") + k + "'");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) throw FormatError("unknown key '" + key + "'");
    }
}

int get_int(const json& j, const char* key) {
    if (!j.at(key).is_number_integer()) throw FormatError(std::string("key '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

Rational get_rational(const json& v) {
    if (!v.is_string()) throw FormatError("rational values must be strings");
    return Rational::parse(v.get<std::string>());
}

RatMat get_matrix(const json& v, int dim) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim) throw FormatError("matrix must have d+1 rows");
    RatMat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = v.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != dim) throw FormatError("matrix row must have d+1 entries");
        for (int jcol = 0; jcol < dim; ++jcol) m.at(i, jcol) = get_rational(row.at(static_cast<std::size_t>(jcol)));
    }
    return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string mask_to_json(const Mask& m) {
    json j;
    j["d"] = m.d();
    j["offset"] = m.lo();
    json mats = json::array();
    for (const auto& mat : m.matrices()) {
        json rows = json::array();
        for (int i = 0; i <= m.d(); ++i) {
            json row = json::array();
            for (int c = 0; c <= m.d(); ++c) row.push_back(mat.at(i, c).str());
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
    return dump(j);
}

Mask mask_from_json(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"d", "offset", "matrices"});
    int d = get_int(j, "d");
    if (d < 1) throw FormatError("mask: d must be >= 1");
    int offset = get_int(j, "offset");
    const json& mats = j.at("matrices");
    if (!mats.is_array()) throw FormatError("mask: 'matrices' must be an array");
    std::vector<RatMat> out;
    for (const auto& m : mats) out.push_back(get_matrix(m, d + 1));
    return Mask(d, offset, std::move(out));
}

std::string vecseq_to_json(const VecSeq& s) {
    json j;
    j["d"] = s.d();
    j["offset"] = s.lo();
    json vecs = json::array();
    for (const auto& v : s.vectors()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.str());
        vecs.push_back(std::move(row));
    }
    j["vectors"] = std::move(vecs);
    return dump(j);
}

VecSeq vecseq_from_json(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"d", "offset", "vectors"});
    int d = get_int(j, "d");
    if (d < 1) throw FormatError("sequence: d must be >= 1");
    int offset = get_int(j, "offset");
    const json& vecs = j.at("vectors");
    if (!vecs.is_array()) throw FormatError("sequence: 'vectors' must be an array");
    std::vector<RatVec> out;
    for (const auto& v : vecs) {
        if (!v.is_array() || static_cast<int>(v.size()) != d + 1)
            throw FormatError("sequence: vector must have d+1 entries");
        RatVec vec;
        for (const auto& x : v) vec.push_back(get_rational(x));
        out.push_back(std::move(vec));
    }
    return VecSeq(d, offset, std::move(out));
}

std::string spectral_system_to_json(const SpectralSystem& s) {
    json j;
    j["d"] = s.d;
    j["order"] = s.order;
    json polys = json::array();
    for (const auto& p : s.polys) {
        json row = json::array();
        for (int t = 0; t <= p.degree(); ++t) row.push_back(p.coeff(t).str());
        if (p.is_zero()) row.push_back("0");
        polys.push_back(std::move(row));
    }
    j["polys"] = std::move(polys);
    return dump(j);
}

SpectralSystem spectral_system_from_json(const std::string& text) {
    json j = parse_json(text);
    require_keys(j, {"d", "order", "polys"});
    SpectralSystem s;
    s.d = get_int(j, "d");
    s.order = get_int(j, "order");
    if (s.d < 1 || s.order < 0) throw FormatError("spectral system: bad dimensions");
    const json& polys = j.at("polys");
    if (!polys.is_array()) throw FormatError("spectral system: 'polys' must be an array");
    for (const auto& p : polys) {
        if (!p.is_array() || p.empty()) throw FormatError("spectral system: polynomial must be a nonempty array");
        std::vector<Rational> coeffs;
        for (const auto& c : p) coeffs.push_back(get_rational(c));
        s.polys.push_back(Poly(std::move(coeffs)));
    }
    if (static_cast<int>(s.polys.size()) != s.order + 1)
        throw FormatError("spectral system: need order+1 polynomials");
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << content;
}

}  // namespace hsub

#include "novikov/io.hpp"

#include <Eigen/Core>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <gmp.h>
#include <sstream>

namespace novikov {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
    out << text;
}

Json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, h);
    return buf;
}

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad field \"") + key + "\": " + e.what());
    }
}

Rational json_rational(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::floor(d) == d && std::abs(d) < 9e15) return Rational(static_cast<long long>(d));
    }
    throw Error(ErrorKind::Parse, "expected an integer or \"p/q\" string, got " + v.dump());
}

Json edge_list(const SimplicialComplex& K, auto value_of) {
    Json out = Json::array();
    const auto& edges = K.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e) out.push_back(Json::array({edges[e][0], edges[e][1], value_of(e)}));
    return out;
}

}  // namespace

bool ComplexDocument::has_integral_cocycle() const {
    if (!cocycle) return true;
    for (const auto& [u, v, value] : *cocycle)
        if (std::floor(value) != value) return false;
    return true;
}

IntegralCocycle ComplexDocument::integral_cocycle() const {
    if (!cocycle) return IntegralCocycle::zero(complex);
    std::vector<std::tuple<Vertex, Vertex, std::int64_t>> triples;
    for (const auto& [u, v, value] : *cocycle) {
        if (std::floor(value) != value || std::abs(value) > 9e15)
            throw Error(ErrorKind::Integrality, "exact backends need integer cocycle values");
        triples.emplace_back(u, v, static_cast<std::int64_t>(value));
    }
    return IntegralCocycle::from_edges(complex, triples);
}

RealCocycle ComplexDocument::real_cocycle() const {
    if (!cocycle) return RealCocycle::zero(complex);
    return RealCocycle::from_edges(complex, *cocycle);
}

ComplexDocument parse_complex(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "complex must be a JSON object");
    ComplexDocument doc;
    const auto n = get_field<long long>(j, "vertices");
    if (n < 0) throw Error(ErrorKind::MalformedSimplex, "vertex count must be nonnegative");
    const auto simplices = get_field<std::vector<std::vector<long long>>>(j, "simplices");
    std::vector<Simplex> maximal;
    for (const auto& s : simplices) {
        Simplex t;
        for (long long v : s) {
            if (v < 0 || v >= n)
                throw Error(ErrorKind::MalformedSimplex, "vertex " + std::to_string(v) + " out of range");
            t.push_back(static_cast<Vertex>(v));
        }
        maximal.push_back(std::move(t));
    }
    doc.complex = SimplicialComplex::build(static_cast<Index>(n), maximal);
    if (j.contains("cocycle")) {
        std::vector<std::tuple<Vertex, Vertex, double>> triples;
        for (const auto& entry : j.at("cocycle")) {
            if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
                !entry[2].is_number())
                throw Error(ErrorKind::Parse, "cocycle entries are [u, v, value], got " + entry.dump());
            triples.emplace_back(entry[0].get<Vertex>(), entry[1].get<Vertex>(), entry[2].get<double>());
        }
        doc.cocycle = std::move(triples);
    }
    if (j.contains("meta")) doc.meta = j.at("meta");
    return doc;
}

ComplexDocument read_complex(const std::string& path) { return parse_complex(read_json_file(path)); }

Json complex_to_json(const SimplicialComplex& K) {
    Json out;
    out["vertices"] = K.vertex_count();
    out["simplices"] = K.maximal_simplices();
    return out;
}

Json cocycle_to_json(const SimplicialComplex& K, const IntegralCocycle& theta) {
    require_defined(K, theta);
    return edge_list(K, [&](std::size_t e) { return theta[static_cast<Index>(e)]; });
}

Json cocycle_to_json(const SimplicialComplex& K, const RealCocycle& theta) {
    require_defined(K, theta);
    return edge_list(K, [&](std::size_t e) { return theta[static_cast<Index>(e)]; });
}

Json complex_to_json(const SimplicialComplex& K, const IntegralCocycle& theta, const Json& meta) {
    Json out = complex_to_json(K);
    out["cocycle"] = cocycle_to_json(K, theta);
    if (!meta.is_null()) out["meta"] = meta;
    return out;
}

Json complex_to_json(const SimplicialComplex& K, const RealCocycle& theta, const Json& meta) {
    Json out = complex_to_json(K);
    out["cocycle"] = cocycle_to_json(K, theta);
    if (!meta.is_null()) out["meta"] = meta;
    return out;
}

Backend LambdaLiteral::natural_backend() const {
    switch (kind) {
        case Kind::Rational: return Backend::Exact;
        case Kind::NumberField: return Backend::NumberField;
        default: return Backend::Float;
    }
}

std::optional<Rational> LambdaLiteral::as_rational() const {
    if (kind == Kind::Rational) return rational;
    if (kind == Kind::NumberField && nf.is_rational()) {
        auto c = nf.coefficients();
        return c.empty() ? Rational(0) : c[0];
    }
    if (kind == Kind::Float) {
        try {
            return Rational::parse(text);
        } catch (const Error&) {
            return std::nullopt;  // exponent notation has no exact reading here
        }
    }
    return std::nullopt;
}

NumberFieldElement LambdaLiteral::as_number_field() const {
    if (kind == Kind::NumberField) return nf;
    if (auto r = as_rational()) return NumberFieldElement(*r);
    throw Error(ErrorKind::BackendMismatch, "lambda " + text + " has no number-field reading");
}

ComplexFloat LambdaLiteral::as_complex() const {
    if (kind == Kind::NumberField && !nf.is_rational())
        throw Error(ErrorKind::BackendMismatch, "number-field lambda " + text + " has no float value; pass a decimal");
    return value;
}

bool LambdaLiteral::is_real() const { return kind != Kind::Complex || value.imag() == 0.0; }

namespace {

LambdaLiteral nonzero(LambdaLiteral lit) {
    const bool zero = lit.kind == LambdaLiteral::Kind::NumberField ? lit.nf.is_zero()
                      : lit.kind == LambdaLiteral::Kind::Rational ? lit.rational.is_zero()
                                                                  : lit.value == ComplexFloat(0.0);
    if (zero) throw Error(ErrorKind::InvalidMonodromy, "lambda must be nonzero: " + lit.text);
    return lit;
}

LambdaLiteral parse_lambda_raw(std::string_view text) {
    LambdaLiteral lit;
    lit.text = std::string(text);
    if (text.empty()) throw Error(ErrorKind::Parse, "empty lambda literal");
    if (text.substr(0, 3) == "nf:") {
        const auto rest = text.substr(3);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "number-field literal is nf:<minpoly>:<element>");
        auto ctx = std::make_shared<const MinimalPolynomial>(MinimalPolynomial::parse(rest.substr(0, colon)));
        lit.kind = LambdaLiteral::Kind::NumberField;
        lit.nf = NumberFieldElement(ctx, parse_polynomial(rest.substr(colon + 1)));
        if (lit.nf.is_rational()) {
            auto c = lit.nf.coefficients();
            lit.value = c.empty() ? 0.0 : c[0].to_double();
        }
        return lit;
    }
    if (text.substr(0, 2) == "c:") {
        const std::string rest(text.substr(2));
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Parse, "complex literal is c:<re>,<im>");
        try {
            std::size_t a = 0, b = 0;
            const double re = std::stod(rest.substr(0, comma), &a);
            const double im = std::stod(rest.substr(comma + 1), &b);
            if (a != comma || b != rest.size() - comma - 1) throw std::invalid_argument("trailing");
            lit.kind = LambdaLiteral::Kind::Complex;
            lit.value = {re, im};
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad complex literal " + lit.text);
        }
        return lit;
    }
    if (text.find_first_of(".eE") != std::string_view::npos) {
        try {
            std::size_t used = 0;
            const double v = std::stod(lit.text, &used);
            if (used != lit.text.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
            lit.kind = LambdaLiteral::Kind::Float;
            lit.value = v;
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad float literal " + lit.text);
        }
        return lit;
    }
    lit.kind = LambdaLiteral::Kind::Rational;
    lit.rational = Rational::parse(text);
    lit.value = lit.rational.to_double();
    return lit;
}

}  // namespace

LambdaLiteral parse_lambda(std::string_view text) { return nonzero(parse_lambda_raw(text)); }

Backend parse_backend(std::string_view text) {
    if (text == "exact") return Backend::Exact;
    if (text == "nf") return Backend::NumberField;
    if (text == "float") return Backend::Float;
    throw Error(ErrorKind::Usage, "unknown backend " + std::string(text) + " (exact|nf|float)");
}

FiberCohomologyAction<Rational> parse_action(const Json& j) {
    FiberCohomologyAction<Rational> action;
    action.fiber_dim = get_field<int>(j, "fiber_dim");
    if (action.fiber_dim < 0) throw Error(ErrorKind::Parse, "fiber_dim must be nonnegative");
    action.degrees.assign(static_cast<std::size_t>(action.fiber_dim + 1), Mat<Rational>(0, 0));
    const Json degrees = j.contains("degrees") ? j.at("degrees") : Json::object();
    if (!degrees.is_object()) throw Error(ErrorKind::Parse, "\"degrees\" must map degree strings to matrices");
    for (const auto& [key, rows] : degrees.items()) {
        int p = -1;
        try {
            std::size_t used = 0;
            p = std::stoi(key, &used);
            if (used != key.size()) p = -1;
        } catch (const std::logic_error&) {
        }
        if (p < 0 || p > action.fiber_dim) throw Error(ErrorKind::Parse, "degree key \"" + key + "\" out of range");
        if (!rows.is_array()) throw Error(ErrorKind::Parse, "degree " + key + " matrix must be a list of rows");
        const auto n = static_cast<Index>(rows.size());
        Mat<Rational> h(n, n);
        for (Index r = 0; r < n; ++r) {
            const Json& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Index>(row.size()) != n)
                throw Error(ErrorKind::Parse, "degree " + key + " matrix must be square");
            for (Index c = 0; c < n; ++c) h(r, c) = json_rational(row[static_cast<std::size_t>(c)]);
        }
        action.degrees[static_cast<std::size_t>(p)] = std::move(h);
    }
    return action;
}

Json action_to_json(const FiberCohomologyAction<Rational>& action) {
    Json out;
    out["fiber_dim"] = action.fiber_dim;
    Json degrees = Json::object();
    for (int p = 0; p <= action.fiber_dim; ++p) {
        const auto& h = action[p];
        if (h.rows() == 0) continue;
        Json rows = Json::array();
        for (Index r = 0; r < h.rows(); ++r) {
            Json row = Json::array();
            for (Index c = 0; c < h.cols(); ++c) {
                const Rational& v = h(r, c);
                if (v.is_integer() && mpz_fits_slong_p(v.numerator().get_mpz_t())) row.push_back(v.numerator().get_si());
                else row.push_back(v.str());
            }
            rows.push_back(std::move(row));
        }
        degrees[std::to_string(p)] = std::move(rows);
    }
    out["degrees"] = std::move(degrees);
    return out;
}

std::vector<std::vector<double>> parse_weights(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "weights must map degree strings to lists");
    std::vector<std::vector<double>> out;
    for (const auto& [key, list] : j.items()) {
        int p = -1;
        try {
            p = std::stoi(key);
        } catch (const std::logic_error&) {
        }
        if (p < 0) throw Error(ErrorKind::Parse, "bad degree key \"" + key + "\"");
        if (static_cast<int>(out.size()) <= p) out.resize(static_cast<std::size_t>(p + 1));
        try {
            out[static_cast<std::size_t>(p)] = list.get<std::vector<double>>();
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::Parse, "weights for degree " + key + ": " + e.what());
        }
    }
    return out;
}

Json profile_to_json(const BettiProfile& profile) {
    Json out;
    out["lambda"] = profile.lambda;
    out["backend"] = to_string(profile.backend);
    out["dims"] = profile.dims;
    out["euler"] = profile.euler;
    out["ill_conditioned"] = profile.ill_conditioned;
    if (profile.tolerance) out["tolerance"] = *profile.tolerance;
    out["ranks"] = profile.ranks;
    return out;
}

Json wang_to_json(const WangProfile& profile, const std::string& lambda) {
    Json out;
    out["lambda"] = lambda;
    out["dims"] = profile.dims;
    out["euler"] = profile.euler;
    return out;
}

Json report_header(const std::string& command, const std::vector<std::string>& argv,
                   const std::vector<std::pair<std::string, std::string>>& inputs) {
    Json out;
    out["schema"] = kReportSchema;
    out["command"] = command;
    out["argv"] = argv;
    Json in = Json::array();
    for (const auto& [role, path] : inputs) {
        Json entry;
        entry["role"] = role;
        entry["path"] = path;
        entry["digest"] = digest(read_text_file(path));
        in.push_back(std::move(entry));
    }
    out["inputs"] = std::move(in);
    Json versions;
    versions["novikov"] = kVersion;
    versions["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION);
    versions["gmp"] = gmp_version;
    out["versions"] = std::move(versions);
    return out;
}

std::string dims_table(const std::vector<Index>& dims, const std::string& title) {
    std::ostringstream os;
    os << title << "\n";
    std::int64_t euler = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
        os << "  H^" << p << "  " << dims[p] << "\n";
        euler += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(dims[p]);
    }
    os << "  euler " << euler << "\n";
    return os.str();
}

}  // namespace novikov

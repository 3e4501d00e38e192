#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "novikov/twisted.hpp"
#include "novikov/wang.hpp"

namespace novikov {

/// Key order is insertion order, which keeps reports byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "v1";
inline constexpr const char* kVersion = "0.1.0";

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

// ---- complexes and cocycles ------------------------------------------------

struct ComplexDocument {
    SimplicialComplex complex;
    /// Raw (u, v, value) triples; absent when the file has no "cocycle" field.
    std::optional<std::vector<std::tuple<Vertex, Vertex, double>>> cocycle;
    Json meta = Json::object();

    bool has_integral_cocycle() const;
    /// Throws Integrality when some value is not an integer. A missing
    /// cocycle is the zero cocycle (trivial local system).
    IntegralCocycle integral_cocycle() const;
    RealCocycle real_cocycle() const;
};

/// { "vertices": N, "simplices": [[...], ...], "cocycle": [[u,v,value], ...], "meta": {...} }
ComplexDocument parse_complex(const Json& j);
ComplexDocument read_complex(const std::string& path);

Json complex_to_json(const SimplicialComplex& K);
Json complex_to_json(const SimplicialComplex& K, const IntegralCocycle& theta, const Json& meta = Json());
Json complex_to_json(const SimplicialComplex& K, const RealCocycle& theta, const Json& meta = Json());

/// [[u, v, value], ...] over every edge.
Json cocycle_to_json(const SimplicialComplex& K, const IntegralCocycle& theta);
Json cocycle_to_json(const SimplicialComplex& K, const RealCocycle& theta);

// ---- lambda literals -------------------------------------------------------

/// "2", "-1", "5/7"           rational
/// "nf:x^2-3*x+1:x"           element of Q[x]/(m), written as a polynomial in x
/// "1.5", "2.618034", "1e-3"  float
/// "c:0.5,1.2"                complex float
struct LambdaLiteral {
    enum class Kind { Rational, NumberField, Float, Complex };
    Kind kind = Kind::Rational;
    std::string text;
    Rational rational;
    NumberFieldElement nf;
    ComplexFloat value;

    /// Backend the literal selects when none is given.
    Backend natural_backend() const;
    /// Exact value, if the literal has one (decimals convert exactly).
    std::optional<Rational> as_rational() const;
    NumberFieldElement as_number_field() const;
    ComplexFloat as_complex() const;
    bool is_real() const;
};

LambdaLiteral parse_lambda(std::string_view text);
/// "exact", "nf" or "float".
Backend parse_backend(std::string_view text);

// ---- Wang actions and weights ---------------------------------------------

/// { "fiber_dim": d, "degrees": { "0": [[1]], "3": [[1,1],[1,2]], ... } }.
/// Unlisted degrees are 0x0. Entries are integers or "p/q" strings.
FiberCohomologyAction<Rational> parse_action(const Json& j);
Json action_to_json(const FiberCohomologyAction<Rational>& action);

/// { "0": [w, ...], "1": [...] } with degrees as keys; unlisted degrees get weight 1.
std::vector<std::vector<double>> parse_weights(const Json& j);

// ---- reports ---------------------------------------------------------------

Json profile_to_json(const BettiProfile& profile);
Json wang_to_json(const WangProfile& profile, const std::string& lambda);

/// Report skeleton: schema, command echo, inputs with digests, versions.
Json report_header(const std::string& command, const std::vector<std::string>& argv,
                   const std::vector<std::pair<std::string, std::string>>& inputs);

/// Human-readable one-line-per-degree table.
std::string dims_table(const std::vector<Index>& dims, const std::string& title);

}  // namespace novikov

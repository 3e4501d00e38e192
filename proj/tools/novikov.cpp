// novikov: twisted cohomology of simplicial complexes from the command line.
//
// Exit codes: 0 success, 1 a verify suite reported a failing check,
// 2 invalid input, 3 numerical failure, 64 usage error.

#include <cmath>
#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "novikov/bounds.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/hodge.hpp"
#include "novikov/io.hpp"
#include "novikov/verify.hpp"
#include "novikov/wang.hpp"

using namespace novikov;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 64;

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const double d = std::strtod(v, &end);
    if (*end != '\0' || !(d > 0.0)) throw Error(ErrorKind::Usage, std::string(name) + " must be a positive number");
    return d;
}

struct Output {
    std::string path;

    void emit(const Json& report, const std::string& text) const {
        if (path.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            write_text_file(path, report.dump(2) + "\n");
            std::cout << text;
        }
    }
};

std::vector<std::string> g_argv;

Json header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs) {
    return report_header(command, g_argv, inputs);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> grid_literals(const std::string& spec) {
    // start:stop:count, inclusive linear grid
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw Error(ErrorKind::Usage, "--lambda-grid is start:stop:count");
    const double a = std::stod(parts[0]), b = std::stod(parts[1]);
    const int n = std::stoi(parts[2]);
    if (n < 1) throw Error(ErrorKind::Usage, "--lambda-grid count must be >= 1");
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        const double v = n == 1 ? a : a + (b - a) * i / (n - 1);
        char buf[64];
        std::string lit(buf, std::to_chars(buf, buf + sizeof buf, v).ptr);
        if (lit.find_first_of(".e") == std::string::npos) lit += ".0";  // keep it a float literal
        out.push_back(lit);
    }
    return out;
}

BettiProfile betti_for(const ComplexDocument& doc, const LambdaLiteral& lit, Backend backend, double tolerance) {
    switch (backend) {
        case Backend::Exact: {
            auto r = lit.as_rational();
            if (!r) throw Error(ErrorKind::BackendMismatch, "lambda " + lit.text + " is not rational");
            return betti_profile(doc.complex, doc.integral_cocycle(), *r);
        }
        case Backend::NumberField:
            return betti_profile(doc.complex, doc.integral_cocycle(), lit.as_number_field());
        case Backend::Float: {
            const RankMode mode = RankMode::Float(tolerance);
            const ComplexFloat z = lit.as_complex();
            if (lit.is_real()) {
                if (doc.has_integral_cocycle()) return betti_profile(doc.complex, doc.integral_cocycle(), z.real(), mode);
                return betti_profile(doc.complex, doc.real_cocycle(), z.real(), mode);
            }
            if (doc.has_integral_cocycle()) return betti_profile(doc.complex, doc.integral_cocycle(), z, mode);
            return betti_profile(doc.complex, doc.real_cocycle(), z, mode);
        }
    }
    return {};
}

Eigen::Matrix2i parse_matrix2(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(std::stoi(item));
    if (v.size() != 4) throw Error(ErrorKind::Usage, "matrix is a,b,c,d (row major)");
    Eigen::Matrix2i m;
    m << v[0], v[1], v[2], v[3];
    return m;
}

std::string matrix_text(const Mat<Rational>& m) {
    std::ostringstream os;
    for (Index r = 0; r < m.rows(); ++r) {
        os << "    [";
        for (Index c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).str();
        os << "]\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    g_argv.assign(argv + 1, argv + argc);
    CLI::App app{"Twisted (Morse-Novikov) cohomology of simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();  // lets -o follow the subcommand
    Output out;
    app.add_option("-o,--out", out.path, "write the JSON report here and print a text table");

    // betti
    auto* betti = app.add_subcommand("betti", "twisted Betti numbers of a complex with a cocycle");
    std::string complex_path, backend_name;
    std::vector<std::string> lambdas;
    std::string lambda_grid;
    double tolerance = 0.0;
    betti->add_option("--complex", complex_path, "complex JSON")->required()->check(CLI::ExistingFile);
    betti->add_option("--lambda", lambdas, "monodromy literal(s): 2, 5/7, 1.5, nf:x^2-3*x+1:x, c:re,im");
    betti->add_option("--lambda-grid", lambda_grid, "float sweep start:stop:count");
    betti->add_option("--backend", backend_name, "exact | nf | float (default: from the literal)");
    betti->add_option("--tolerance", tolerance, "float rank tolerance (relative to sigma_max)");

    // wang
    auto* wang = app.add_subcommand("wang", "Wang-sequence dims from a fiber cohomology action");
    std::string action_path;
    wang->add_option("--action", action_path, "action JSON")->required()->check(CLI::ExistingFile);
    wang->add_option("--lambda", lambdas, "monodromy literal(s)")->required();
    wang->add_option("--backend", backend_name, "exact | nf | float");
    wang->add_option("--tolerance", tolerance, "float rank tolerance");

    // product
    auto* prod = app.add_subcommand("product", "staircase product of two complexes with the combined cocycle");
    std::string left_path, right_path;
    prod->add_option("--left", left_path)->required()->check(CLI::ExistingFile);
    prod->add_option("--right", right_path)->required()->check(CLI::ExistingFile);

    // mapping-torus
    auto* mt = app.add_subcommand("mapping-torus", "mapping torus of an automorphism, or a torus bundle");
    std::string map_path, torus_matrix, bundle_matrix;
    int layers = 3, grid = 3;
    mt->add_option("--complex", complex_path, "fiber complex JSON (with --map)")->check(CLI::ExistingFile);
    mt->add_option("--map", map_path, "automorphism JSON {\"images\": [...]}")->check(CLI::ExistingFile);
    mt->add_option("--torus-matrix", torus_matrix, "a,b,c,d acting on the staircase torus grid");
    mt->add_option("--bundle", bundle_matrix, "a,b,c,d in GL(2,Z), nonnegative: torus bundle construction");
    mt->add_option("--grid", grid, "torus grid size")->check(CLI::PositiveNumber);
    mt->add_option("--layers", layers, "layers of the mapping torus (>= 3)");
    bool emit_action = false;
    mt->add_flag("--action", emit_action, "emit the induced fiber action instead of the complex");

    // cover
    auto* cov = app.add_subcommand("cover", "cyclic cover classified by an integral cocycle");
    int sheets = 2;
    cov->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);
    cov->add_option("--sheets", sheets)->required();

    // hodge
    auto* hodge = app.add_subcommand("hodge", "discrete twisted Hodge theory (float)");
    std::string weights_path;
    std::vector<int> degrees;
    std::uint64_t seed = 1;
    bool normalize = false;
    hodge->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);
    hodge->add_option("--lambda", lambdas, "monodromy (float or rational)")->required()->expected(1);
    hodge->add_option("--weights", weights_path, "weights JSON {\"p\": [...]}")->check(CLI::ExistingFile);
    hodge->add_option("--degree", degrees, "degrees (default all)");
    hodge->add_option("--seed", seed, "seed for the decomposition probe");
    hodge->add_flag("--normalize", normalize, "harmonic representative of the cocycle and its t");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "Wallis integral, C(b), B_n(x), b C(b) table");
    int n_dim = 2;
    std::vector<double> bs, xs, b_grid;
    bnd->add_option("--n", n_dim)->required();
    bnd->add_option("--b", bs, "evaluate C(b)");
    bnd->add_option("--x", xs, "evaluate B_n(x)");
    bnd->add_option("--grid", b_grid, "decreasing b grid for b C(b)");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite, fixture_name;
    int trials = 20;
    bool not_manifold = false;
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--complex", complex_path)->check(CLI::ExistingFile);
    ver->add_option("--fixture", fixture_name, "named fixture (default torus2)");
    ver->add_option("--trials", trials);
    ver->add_option("--seed", seed);
    ver->add_option("--lambda", lambdas, "lambdas for nilpotent-vanishing");
    ver->add_flag("--not-manifold", not_manifold, "skip the duality check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if ((betti->count("--tolerance") || wang->count("--tolerance")) && !(tolerance > 0.0 && std::isfinite(tolerance)))
            throw Error(ErrorKind::Parameter, "--tolerance must be a positive number");
        const double rank_tol = tolerance > 0 ? tolerance : env_double("NOVIKOV_RANK_TOL", kDefaultRankTolerance);

        if (betti->parsed()) {
            const auto doc = read_complex(complex_path);
            std::vector<std::string> lits = lambdas;
            if (!lambda_grid.empty()) {
                auto g = grid_literals(lambda_grid);
                lits.insert(lits.end(), g.begin(), g.end());
            }
            if (lits.empty()) throw Error(ErrorKind::Usage, "betti needs --lambda or --lambda-grid");
            Json report = header("betti", {{"complex", complex_path}});
            Json profiles = Json::array();
            std::string text;
            bool any_float = false;
            const auto start = std::chrono::steady_clock::now();
            for (const auto& s : lits) {
                const LambdaLiteral lit = parse_lambda(s);
                const Backend backend = backend_name.empty() ? lit.natural_backend() : parse_backend(backend_name);
                any_float = any_float || backend == Backend::Float;
                BettiProfile p = betti_for(doc, lit, backend, rank_tol);
                p.lambda = lit.text;
                profiles.push_back(profile_to_json(p));
                text += dims_table(p.dims, "lambda " + lit.text + " (" + to_string(p.backend) + ")" +
                                               (p.ill_conditioned ? " ill-conditioned" : ""));
            }
            report["results"] = profiles;
            if (any_float) report["timing_ms"] = elapsed_ms(start);  // exact reports stay byte-stable
            out.emit(report, text);
            return 0;
        }

        if (wang->parsed()) {
            const auto action = parse_action(read_json_file(action_path));
            Json report = header("wang", {{"action", action_path}});
            Json results = Json::array();
            std::string text;
            for (const auto& s : lambdas) {
                const LambdaLiteral lit = parse_lambda(s);
                const Backend backend = backend_name.empty() ? lit.natural_backend() : parse_backend(backend_name);
                WangProfile w;
                if (backend == Backend::Exact) {
                    auto r = lit.as_rational();
                    if (!r) throw Error(ErrorKind::BackendMismatch, "lambda " + lit.text + " is not rational");
                    w = wang_dims(action, *r);
                } else if (backend == Backend::NumberField) {
                    w = wang_dims(action.cast<NumberFieldElement>(), lit.as_number_field());
                } else {
                    w = wang_dims(action.cast<ComplexFloat>(), lit.as_complex(), RankMode::Float(rank_tol));
                }
                Json j = wang_to_json(w, lit.text);
                j["backend"] = to_string(backend);
                results.push_back(j);
                text += dims_table(w.dims, "lambda " + lit.text + " (" + to_string(backend) + ")");
            }
            report["results"] = results;
            out.emit(report, text);
            return 0;
        }

        if (prod->parsed()) {
            const auto a = read_complex(left_path), b = read_complex(right_path);
            const SimplicialComplex K = product(a.complex, b.complex);
            Json meta{{"recipe", "product"},
                      {"left", digest(read_text_file(left_path))},
                      {"right", digest(read_text_file(right_path))}};
            Json j;
            if (a.has_integral_cocycle() && b.has_integral_cocycle())
                j = complex_to_json(K, combine_cocycles(a.complex, a.integral_cocycle(), b.complex, b.integral_cocycle(), K), meta);
            else
                j = complex_to_json(K, combine_cocycles(a.complex, a.real_cocycle(), b.complex, b.real_cocycle(), K), meta);
            out.emit(j, "product: " + std::to_string(K.vertex_count()) + " vertices, dim " + std::to_string(K.dimension()) + "\n");
            return 0;
        }

        if (mt->parsed()) {
            const int chosen = !map_path.empty() + !torus_matrix.empty() + !bundle_matrix.empty();
            if (chosen != 1) throw Error(ErrorKind::Usage, "mapping-torus needs exactly one of --map, --torus-matrix, --bundle");
            SimplicialComplex K;
            IntegralCocycle theta;
            Json meta;
            FiberCohomologyAction<Rational> action;
            if (!bundle_matrix.empty()) {
                const TorusBundle b = torus_bundle(parse_matrix2(bundle_matrix), grid);
                K = b.complex;
                theta = b.fiber_cocycle;
                meta = {{"recipe", b.recipe}, {"holonomy_period", b.holonomy_period}, {"refinement", b.refinement}};
                if (emit_action) action = induced_action(b);
            } else {
                SimplicialComplex fiber;
                SimplicialMap phi;
                if (!torus_matrix.empty()) {
                    fiber = staircase_torus(grid, {0, 0}).complex;
                    phi = torus_grid_map(grid, parse_matrix2(torus_matrix));
                } else {
                    if (complex_path.empty()) throw Error(ErrorKind::Usage, "--map needs --complex");
                    fiber = read_complex(complex_path).complex;
                    phi.images = read_json_file(map_path).at("images").get<std::vector<Vertex>>();
                }
                const MappingTorus m = mapping_torus(fiber, phi, layers);
                K = m.complex;
                theta = m.fiber_cocycle;
                meta = {{"recipe", m.recipe}, {"holonomy_period", m.holonomy_period}};
                if (emit_action) action = induced_action(fiber, phi);
            }
            if (emit_action) {
                Json j = action_to_json(action);
                j["holonomy_period"] = meta["holonomy_period"];
                std::string text;
                for (int p = 0; p <= action.fiber_dim; ++p) text += "  H_" + std::to_string(p) + "\n" + matrix_text(action[p]);
                out.emit(j, text);
            } else {
                out.emit(complex_to_json(K, theta, meta),
                         "mapping torus: " + std::to_string(K.vertex_count()) + " vertices, chi " +
                             std::to_string(euler_characteristic(K)) + "\n");
            }
            return 0;
        }

        if (cov->parsed()) {
            const auto doc = read_complex(complex_path);
            const CoveringData cd = doc.has_integral_cocycle() ? cyclic_cover(doc.complex, doc.integral_cocycle(), sheets)
                                                               : cyclic_cover(doc.complex, doc.real_cocycle(), sheets);
            Json meta{{"recipe", "cyclic_cover"}, {"sheets", sheets}, {"base", digest(read_text_file(complex_path))},
                      {"projection", cd.projection.images}};
            out.emit(complex_to_json(cd.total, cd.pullback, meta),
                     "cover: " + std::to_string(cd.total.vertex_count()) + " vertices\n");
            return 0;
        }

        if (hodge->parsed()) {
            const auto doc = read_complex(complex_path);
            const LambdaLiteral lit = parse_lambda(lambdas.front());
            if (!lit.is_real()) throw Error(ErrorKind::BackendMismatch, "hodge runs on real lambda");
            const double lambda = lit.as_complex().real();
            const double threshold = env_double("NOVIKOV_HARMONIC_TOL", kHarmonicThreshold);
            const SimplicialComplex& K = doc.complex;
            const InnerProduct w = weights_path.empty() ? InnerProduct::unit(K)
                                                        : InnerProduct::from_degrees(K, parse_weights(read_json_file(weights_path)));
            std::vector<std::pair<std::string, std::string>> inputs{{"complex", complex_path}};
            if (!weights_path.empty()) inputs.emplace_back("weights", weights_path);
            Json report = header("hodge", inputs);
            const auto start = std::chrono::steady_clock::now();
            const RealCocycle theta = doc.real_cocycle();
            const BettiProfile ranks = betti_profile(K, theta, lambda, RankMode::Float(rank_tol));
            if (degrees.empty())
                for (int p = 0; p <= K.dimension(); ++p) degrees.push_back(p);
            Rng rng(seed);
            std::normal_distribution<double> gauss;
            Json rows = Json::array();
            std::string text = "lambda " + lit.text + "\n";
            for (int p : degrees) {
                const HarmonicSpectrum spec = harmonic_spectrum(K, theta, lambda, w, p, threshold);
                Vec<double> probe(K.count(p));
                for (Index i = 0; i < probe.size(); ++i) probe(i) = gauss(rng);
                const auto dec = hodge_decompose(K, theta, lambda, w, p, probe, threshold);
                rows.push_back({{"degree", p},
                                {"harmonic_dim", spec.dim},
                                {"rank_dim", ranks.dims[static_cast<std::size_t>(p)]},
                                {"spectral_gap", spec.spectral_gap},
                                {"largest_eigenvalue", spec.largest},
                                {"decomposition_residual", dec.residual},
                                {"max_overlap", dec.max_overlap}});
                text += "  H^" + std::to_string(p) + "  harmonic " + std::to_string(spec.dim) + "  rank-based " +
                        std::to_string(ranks.dims[static_cast<std::size_t>(p)]) + "  gap " + std::to_string(spec.spectral_gap) + "\n";
            }
            report["lambda"] = lit.text;
            report["threshold"] = threshold;
            report["seed"] = seed;
            report["results"] = rows;
            if (normalize) {
                const RealCocycle h = harmonic_representative(K, theta, w);
                const Normalization nrm = novikov_normalize(K, h, w);
                report["normalization"] = {{"t", nrm.t},
                                           {"volume", nrm.volume},
                                           {"norm2", nrm.norm2},
                                           {"volume_convention", nrm.volume_convention},
                                           {"representative", cocycle_to_json(K, h)}};
                text += "  t = " + std::to_string(nrm.t) + " (" + nrm.volume_convention + ")\n";
            }
            report["timing_ms"] = elapsed_ms(start);
            out.emit(report, text);
            return 0;
        }

        if (bnd->parsed()) {
            BoundsConfig cfg;
            cfg.quadrature_tolerance = env_double("NOVIKOV_QUAD_TOL", cfg.quadrature_tolerance);
            cfg.root_tolerance = env_double("NOVIKOV_ROOT_TOL", cfg.root_tolerance);
            cfg.product_cut = env_double("NOVIKOV_PRODUCT_CUT", cfg.product_cut);
            Json report = header("bounds", {});
            std::ostringstream text;
            text.precision(12);
            report["n"] = n_dim;
            report["omega"] = wallis(n_dim);
            text << "n = " << n_dim << "  omega_n = " << wallis(n_dim) << "\n";
            Json cs = Json::array();
            for (double b : bs) {
                const RootResult r = c_of_b(n_dim, b, cfg);
                cs.push_back({{"b", b}, {"C", r.x}, {"residual", r.residual}});
                text << "  C(" << b << ") = " << r.x << "\n";
            }
            report["c_of_b"] = cs;
            Json bn = Json::array();
            for (double x : xs) {
                const ProductValue v = b_n(n_dim, x, cfg);
                Json row{{"x", x}, {"B", v.value}, {"log_tail_bound", v.log_tail_bound}, {"terms", v.terms}};
                if (x <= 1.0) row["bound"] = b_n_small_bound(n_dim, x);
                else row["bound"] = b_n_large_bound(n_dim, x, cfg);
                bn.push_back(row);
                text << "  B_" << n_dim << "(" << x << ") = " << v.value << "  bound " << row["bound"].get<double>() << "\n";
            }
            report["b_n"] = bn;
            if (!b_grid.empty()) {
                const BcTable t = bc_limit_check(n_dim, b_grid, cfg);
                Json rows = Json::array();
                for (const auto& r : t.rows) {
                    rows.push_back({{"b", r.b}, {"bC", r.b_times_c}, {"omega", r.omega}, {"gap", r.gap}});
                    text << "  b = " << r.b << "  bC(b) = " << r.b_times_c << "  gap " << r.gap << "\n";
                }
                report["bc_table"] = {{"rows", rows},
                                     {"limit", t.limit},
                                     {"below_omega", t.below_omega},
                                     {"gap_decreasing", t.gap_decreasing},
                                     {"approaching_limit", t.approaching_limit}};
                text << "  limit of b C(b) as b -> 0: " << t.limit << "\n";
            }
            out.emit(report, text.str());
            return 0;
        }

        if (ver->parsed()) {
            SuiteOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            opts.closed_manifold = !not_manifold;
            opts.float_tolerance = env_double("NOVIKOV_RANK_TOL", 1e-8);
            SuiteResult r;
            std::vector<std::pair<std::string, std::string>> inputs;
            if (suite == "theorem21") {
                SimplicialComplex K;
                IntegralCocycle theta;
                if (!complex_path.empty()) {
                    const auto doc = read_complex(complex_path);
                    K = doc.complex;
                    theta = doc.integral_cocycle();
                    inputs.emplace_back("complex", complex_path);
                } else {
                    const Fixture f = fixture_by_name(fixture_name.empty() ? "torus2" : fixture_name);
                    K = f.complex;
                    theta = f.cocycle;
                }
                r = verify_theorem21(K, theta, opts);
            } else if (suite == "nilpotent-vanishing") {
                std::vector<Rational> ls;
                for (const auto& s : lambdas.empty() ? std::vector<std::string>{"2", "3", "5/2"} : lambdas) {
                    auto v = parse_lambda(s).as_rational();
                    if (!v) throw Error(ErrorKind::BackendMismatch, "nilpotent-vanishing takes rational lambdas");
                    ls.push_back(*v);
                }
                r = verify_nilpotent_vanishing(ls, opts);
            } else {
                r = verify_sol_nonvanishing(opts);
            }
            Json report = header("verify", inputs);
            report["results"] = r.to_json();
            std::string text;
            for (const auto& v : r.verdicts)
                text += std::string(v.skipped ? "SKIP " : v.passed ? "PASS " : "FAIL ") + v.name + "\n";
            out.emit(report, text);
            return r.passed() ? 0 : kExitVerifyFailed;
        }
    } catch (const Error& e) {
        std::cerr << "novikov: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Numerical: return kExitNumerical;
            case ErrorKind::Usage: return kExitUsage;
            default: return kExitInvalid;
        }
    } catch (const Json::exception& e) {
        std::cerr << "novikov: parse: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "novikov: usage: bad number (" << e.what() << ")\n";
        return kExitUsage;
    }
    return kExitUsage;
}

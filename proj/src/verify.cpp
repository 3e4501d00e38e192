#include "novikov/verify.hpp"

#include <cmath>

namespace novikov {

bool SuiteResult::passed() const {
    for (const auto& v : verdicts)
        if (!v.passed) return false;
    return true;
}

Json SuiteResult::to_json() const {
    Json out;
    out["suite"] = suite;
    out["seed"] = seed;
    out["passed"] = passed();
    Json list = Json::array();
    for (const auto& v : verdicts) {
        Json entry;
        entry["name"] = v.name;
        entry["passed"] = v.passed;
        if (v.skipped) entry["skipped"] = true;
        entry["payload"] = v.payload;
        list.push_back(std::move(entry));
    }
    out["verdicts"] = std::move(list);
    return out;
}

std::vector<std::string> suite_names() { return {"theorem21", "nilpotent-vanishing", "sol-nonvanishing"}; }

namespace {

void fail(Verdict& v, Json payload) {
    if (!v.passed) return;  // keep the first counterexample
    v.passed = false;
    v.payload = std::move(payload);
}

bool dominated(const std::vector<Index>& small, const std::vector<Index>& big) {
    if (small.size() != big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

}  // namespace

SuiteResult verify_theorem21(const SimplicialComplex& K, const IntegralCocycle& theta, const SuiteOptions& options) {
    require_closed(K, theta);
    SuiteResult result{"theorem21", options.seed, {}};
    Rng rng(options.seed);
    const std::int64_t chi = euler_characteristic(K);
    const int n = K.dimension();

    Verdict gauge{"gauge-invariance"}, duality{"duality"}, euler{"euler-invariance"}, kunneth{"kunneth"},
        cover{"cover-injectivity"};
    duality.skipped = !options.closed_manifold;
    const auto c3 = circle(3);
    const auto c3xK = product(K, c3);

    for (int t = 0; t < options.trials; ++t) {
        const Rational lambda = random_lambda(rng);
        const BettiProfile base = betti_profile(K, theta, lambda);

        const auto f = random_potential(K, rng);
        const BettiProfile gauged = betti_profile(K, gauge_transform(K, theta, f), lambda);
        if (!(gauged == base))
            fail(gauge, {{"trial", t}, {"lambda", lambda.str()}, {"f", f}, {"dims", base.dims}, {"gauged", gauged.dims}});

        const IntegralCocycle random_theta = random_cocycle(K, rng);
        const BettiProfile other = betti_profile(K, random_theta, lambda);
        if (other.euler != chi || base.euler != chi)
            fail(euler, {{"trial", t}, {"lambda", lambda.str()}, {"theta", random_theta.values()}, {"euler", other.euler},
                         {"chi", chi}});

        if (options.closed_manifold) {
            const DualityResult d = duality_check(K, theta, lambda);
            bool ok = d.holds;
            if (has_nontrivial_monodromy(K, theta, lambda) && n >= 0)
                ok = ok && d.forward.dims.front() == 0 && d.forward.dims.back() == 0;
            if (!ok)
                fail(duality, {{"trial", t}, {"lambda", lambda.str()}, {"forward", d.forward.dims}, {"backward", d.backward.dims}});
        }

        if (t < std::max(1, options.trials / 4)) {  // the product is the expensive check
            const auto gamma = circle_cocycle(c3, static_cast<std::int64_t>(t % 3));
            const BettiProfile circle_profile = betti_profile(c3, gamma, lambda);
            const BettiProfile prod = betti_profile(c3xK, combine_cocycles(K, theta, c3, gamma, c3xK), lambda);
            if (!kunneth_check(base, circle_profile, prod))
                fail(kunneth, {{"trial", t}, {"lambda", lambda.str()}, {"factor", base.dims}, {"circle", circle_profile.dims},
                               {"product", prod.dims}});
        }

        const int k = 2 + t % 2;
        const Rational cover_lambda = (t % 5 == 0) ? Rational(-1) : lambda;
        const CoveringData cd = cyclic_cover(K, theta, k);
        const BettiProfile down = betti_profile(K, theta, cover_lambda);
        const BettiProfile up = betti_profile(cd.total, cd.pullback, cover_lambda);
        if (!dominated(down.dims, up.dims))
            fail(cover, {{"trial", t}, {"k", k}, {"lambda", cover_lambda.str()}, {"base", down.dims}, {"cover", up.dims}});
    }
    for (Verdict* v : {&gauge, &duality, &euler, &kunneth, &cover})
        if (v->passed) v->payload = {{"trials", options.trials}};
    result.verdicts = {gauge, duality, euler, kunneth, cover};
    return result;
}

SuiteResult verify_nilpotent_vanishing(const std::vector<Rational>& lambdas, const SuiteOptions& options) {
    SuiteResult result{"nilpotent-vanishing", options.seed, {}};
    const TorusBundle nil = torus_bundle(Eigen::Matrix2i{{1, 1}, {0, 1}});
    const auto action = induced_action(nil);
    for (const Rational& lambda : lambdas) {
        Verdict v{"nil@" + lambda.str()};
        const BettiProfile simplicial = betti_profile(nil.complex, nil.fiber_cocycle, lambda);
        const WangProfile wang = wang_dims(action, pow_int(lambda, nil.holonomy_period));
        const bool zero = std::all_of(simplicial.dims.begin(), simplicial.dims.end(), [](Index d) { return d == 0; });
        v.payload = {{"lambda", lambda.str()}, {"simplicial", simplicial.dims}, {"wang", wang.dims}};
        v.passed = (lambda == Rational(1) || zero) && simplicial.dims == wang.dims;
        result.verdicts.push_back(std::move(v));
    }
    return result;
}

SuiteResult verify_sol_nonvanishing(const SuiteOptions& options) {
    SuiteResult result{"sol-nonvanishing", options.seed, {}};
    const TorusBundle sol = torus_bundle(Eigen::Matrix2i{{2, 1}, {1, 1}});
    const auto action = induced_action(sol);
    auto ctx = std::make_shared<const MinimalPolynomial>(MinimalPolynomial::parse("x^2-3*x+1"));
    const NumberFieldElement root = NumberFieldElement::generator(ctx);
    const WangProfile wang = wang_dims(action.cast<NumberFieldElement>(), pow_int(root, sol.holonomy_period));
    const double numeric = (3.0 + std::sqrt(5.0)) / 2.0;
    const BettiProfile simplicial = betti_profile(sol.complex, sol.fiber_cocycle.cast<double>(), numeric,
                                                  RankMode::Float(options.float_tolerance));
    const std::vector<Index> expected{0, 1, 1, 0};
    Verdict w{"wang-nf"}, s{"simplicial-float"};
    w.passed = wang.dims == expected;
    w.payload = {{"lambda", "nf:x^2-3*x+1:x"}, {"dims", wang.dims}, {"euler", wang.euler}};
    s.passed = simplicial.dims == wang.dims && !simplicial.ill_conditioned;
    s.payload = profile_to_json(simplicial);
    result.verdicts = {w, s};
    return result;
}

}  // namespace novikov

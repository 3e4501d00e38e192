#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "novikov/constructions.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/io.hpp"
#include "novikov/verify.hpp"
#include "support.hpp"

using namespace novikov;
using novikov::test::kind_of;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(NOVIKOV_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return std::string(NOVIKOV_DATA) + "/" + name; }

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "novikov-tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("interface-cli") {

TEST_CASE("lambda literals") {
    CHECK(parse_lambda("2").natural_backend() == Backend::Exact);
    CHECK(*parse_lambda("5/7").as_rational() == Rational(5, 7));
    CHECK(*parse_lambda("-1").as_rational() == Rational(-1));
    const auto nf = parse_lambda("nf:x^2-3*x+1:x");
    CHECK(nf.natural_backend() == Backend::NumberField);
    CHECK(nf.as_number_field() * (NumberFieldElement(3) - nf.as_number_field()) == NumberFieldElement(1));
    const auto f = parse_lambda("2.618034");
    CHECK(f.natural_backend() == Backend::Float);
    CHECK(f.as_complex().real() == doctest::Approx(2.618034));
    const auto c = parse_lambda("c:0.5,1.2");
    CHECK_FALSE(c.is_real());
    CHECK(c.as_complex() == ComplexFloat(0.5, 1.2));
    CHECK(kind_of([] { return parse_lambda("two"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { return parse_lambda("0"); }) == ErrorKind::InvalidMonodromy);
    CHECK(parse_backend("nf") == Backend::NumberField);
    CHECK(kind_of([] { return parse_backend("fast"); }) == ErrorKind::Usage);
}

TEST_CASE("complex documents round-trip with identical profiles") {
    Rng rng(81);
    for (const auto& fx : standard_fixtures()) {
        const Json j = complex_to_json(fx.complex, fx.cocycle);
        const auto doc = parse_complex(Json::parse(j.dump()));
        CHECK(doc.complex == fx.complex);
        CHECK(doc.integral_cocycle() == fx.cocycle);
        for (int trial = 0; trial < 2; ++trial) {
            const Rational lambda = random_lambda(rng);
            CHECK(betti_profile(doc.complex, doc.integral_cocycle(), lambda).dims ==
                  betti_profile(fx.complex, fx.cocycle, lambda).dims);
        }
    }
}

TEST_CASE("complex parse errors") {
    CHECK(kind_of([] { return parse_complex(Json::parse(R"({"vertices": 1, "simplices": [[0, 0]]})")); }) ==
          ErrorKind::MalformedSimplex);
    CHECK(kind_of([] {
              return parse_complex(Json::parse(R"({"vertices": 3, "simplices": [[0, 1], [1, 2]], "cocycle": [[0, 1, 1]]})"))
                  .integral_cocycle();
          }) == ErrorKind::IncompleteCocycle);
    CHECK(kind_of([] {
              return parse_complex(Json::parse(R"({"vertices": 2, "simplices": [[0, 1]], "cocycle": [[0, 1, 0.5]]})"))
                  .integral_cocycle();
          }) == ErrorKind::Integrality);
    CHECK(kind_of([] { return parse_complex(Json::parse(R"({"vertices": 3, "simplices": 3})")); }) == ErrorKind::Parse);
    const auto doc = parse_complex(Json::parse(R"({"vertices": 3, "simplices": [[0, 1], [1, 2], [0, 2]]})"));
    CHECK(doc.integral_cocycle() == IntegralCocycle::zero(circle(3)));
}

TEST_CASE("action and weight files") {
    const auto action = parse_action(read_json_file(data("exm13.json")));
    CHECK(action.fiber_dim == 6);
    CHECK(action[3].rows() == 2);
    CHECK(action[1].rows() == 0);
    CHECK(parse_action(action_to_json(action)).degrees == action.degrees);
    const auto w = parse_weights(Json::parse(R"({"1": [1, 2, 3]})"));
    REQUIRE(w.size() == 2);
    CHECK(w[0].empty());
    CHECK(w[1] == std::vector<double>{1, 2, 3});
}

TEST_CASE("FNV-1a digests") {
    CHECK(digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(digest("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("betti on the torus file") {
    const auto r = cli("betti --complex " + data("torus2.json") + " --lambda 2 --backend exact");
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["schema"] == "v1");
    CHECK(j["results"][0]["dims"] == Json::array({0, 0, 0}));
    CHECK(j["results"][0]["euler"] == 0);
}

TEST_CASE("exact reports are byte-identical across runs") {
    const std::string args = "betti --complex " + data("torus3.json") + " --lambda 5/7 --lambda 1";
    const auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("timing") == std::string::npos);
}

TEST_CASE("wang on the example action") {
    const auto r = cli("wang --action " + data("exm13.json") + " --lambda nf:x^2-3*x+1:x");
    REQUIRE(r.code == 0);
    const auto dims = Json::parse(r.out)["results"][0]["dims"];
    CHECK(dims[3] == 1);
    CHECK(dims[4] == 1);
}

TEST_CASE("verify suites pass and are reproducible") {
    const auto a = cli("verify --suite theorem21 --complex " + data("torus2.json") + " --trials 8 --seed 5");
    const auto b = cli("verify --suite theorem21 --complex " + data("torus2.json") + " --trials 8 --seed 5");
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out)["results"] == Json::parse(b.out)["results"]);
    CHECK(cli("verify --suite nilpotent-vanishing --lambda 2 --lambda 3 --lambda 5/2").code == 0);

    const auto fx = fixture_by_name("torus2");
    SuiteOptions opt;
    opt.trials = 6;
    opt.seed = 9;
    const auto r1 = verify_theorem21(fx.complex, fx.cocycle, opt);
    const auto r2 = verify_theorem21(fx.complex, fx.cocycle, opt);
    CHECK(r1.passed());
    CHECK(r1.to_json() == r2.to_json());
}

TEST_CASE("constructed complexes written and re-read keep their profiles") {
    const auto dir = scratch();
    const auto out = (dir / "mt.json").string();
    const auto r = cli("mapping-torus --torus-matrix 0,1,1,0 --grid 3 -o " + out);
    REQUIRE(r.code == 0);
    const auto doc = read_complex(out);
    CHECK(doc.meta.contains("holonomy_period"));
    const auto K = staircase_torus(3, {0, 0}).complex;
    const auto mt = mapping_torus(K, torus_grid_map(3, (Eigen::Matrix2i() << 0, 1, 1, 0).finished()));
    CHECK(doc.complex == mt.complex);
    CHECK(betti_profile(doc.complex, doc.integral_cocycle(), Rational(-1)).dims ==
          betti_profile(mt.complex, mt.fiber_cocycle, Rational(-1)).dims);

    const auto cov = (dir / "cover.json").string();
    REQUIRE(cli("cover --complex " + data("circle3.json") + " --sheets 2 -o " + cov).code == 0);
    const auto cd = read_complex(cov);
    CHECK(betti_profile(cd.complex, cd.integral_cocycle(), Rational(-1)).dims == std::vector<Index>{1, 1});
}

TEST_CASE("exit codes") {
    CHECK(cli("frobnicate").code == 64);
    CHECK(cli("betti --complex " + data("torus2.json") + " --lambda 0").code == 2);
    CHECK(cli("bounds --n 1 --b 1").code == 2);
    CHECK(cli("betti --complex " + data("torus2.json") + " --lambda 2 --backend float --tolerance -1").code == 2);

    const auto dir = scratch();
    const auto bad = (dir / "open.json").string();
    write_text_file(bad, R"({"vertices": 3, "simplices": [[0, 1, 2]], "cocycle": [[0, 1, 1], [1, 2, 1], [0, 2, 0]]})");
    CHECK(cli("betti --complex " + bad + " --lambda 2").code == 2);
}

TEST_CASE("bounds and hodge reports") {
    const auto b = cli("bounds --n 2 --b 1");
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out)["c_of_b"][0]["C"].get<double>() == doctest::Approx(1.1210594).epsilon(1e-7));
    const auto h = cli("hodge --complex " + data("circle3.json") + " --lambda 1 --normalize");
    REQUIRE(h.code == 0);
    CHECK(Json::parse(h.out)["normalization"]["t"].get<double>() == doctest::Approx(3.0));
}

}  // TEST_SUITE

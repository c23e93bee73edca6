#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "cca/core.hpp"

using namespace cca;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ArrayParams paper_params(int n = 60) {
    // Q = 1.1e6, xi = 6.47e-4 in units of omega_c, so alpha = xi/2
    return ArrayParams{n, 1.0, 3.235e-4, 1.1e6, 1.0};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("validate accepts the reference parameter set") {
    const ArrayParams p = validate(paper_params());
    CHECK(p.n_cavities == 60);
    CHECK(p.alpha == 3.235e-4);
}

TEST_CASE("validate accepts the lossless limit q_factor = infinity") {
    ArrayParams p = paper_params();
    p.q_factor = kInf;
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("validate names the violated invariant") {
    ArrayParams p = paper_params();
    p.n_cavities = 0;
    CHECK_THROWS_WITH_AS(validate(p), "n_cavities >= 1 violated", std::invalid_argument);

    p = paper_params();
    p.alpha = 0.6;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p.alpha = 0.5;  // boundary is excluded
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p.alpha = 0.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p = paper_params();
    p.q_factor = 100.0;  // boundary is excluded
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p = paper_params();
    p.omega_c = 0.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p = paper_params();
    p.period = -1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("derived rates from the reference parameters") {
    const DerivedRates r = derive_rates(paper_params());
    CHECK(r.gamma == 2.0 / 1.1e6);
    CHECK(std::abs(r.gamma - 1.8182e-6) < 1e-10);
    CHECK(r.xi == doctest::Approx(6.47e-4).epsilon(1e-14));
    CHECK(r.kappa == doctest::Approx(2.0 * 3.235e-4 * r.gamma).epsilon(1e-15));
    CHECK(r.omega_eff.real() == 1.0);
    CHECK(r.omega_eff.imag() == -r.gamma);
}

TEST_CASE("zeta matches the reference table") {
    CHECK(std::abs(derive_rates(paper_params(5)).zeta - 71.17) <= 0.01);
    CHECK(std::abs(derive_rates(paper_params(30)).zeta - 11.86) <= 0.01);
    CHECK(std::abs(derive_rates(paper_params(50)).zeta - 7.117) <= 0.01);
    CHECK(std::abs(derive_rates(paper_params(100)).zeta - 3.559) <= 0.01);
}

TEST_CASE("derive_rates is scale covariant in omega_c") {
    ArrayParams p{7, 0.75, 0.02, 5e4, 2.0};
    const DerivedRates base = derive_rates(p);

    ArrayParams doubled = p;
    doubled.omega_c *= 2.0;  // power of two: scaling is exact in floating point
    const DerivedRates twice = derive_rates(doubled);
    CHECK(twice.gamma == 2.0 * base.gamma);
    CHECK(twice.xi == 2.0 * base.xi);
    CHECK(twice.kappa == 2.0 * base.kappa);
    CHECK(twice.omega_eff == 2.0 * base.omega_eff);
    CHECK(twice.zeta == base.zeta);

    ArrayParams tripled = p;
    tripled.omega_c *= 3.0;
    const DerivedRates thrice = derive_rates(tripled);
    CHECK(thrice.gamma == doctest::Approx(3.0 * base.gamma).epsilon(1e-15));
    CHECK(thrice.xi == doctest::Approx(3.0 * base.xi).epsilon(1e-15));
    CHECK(thrice.zeta == base.zeta);
}

TEST_CASE("kappa/xi equals gamma/omega_c equals 2/Q") {
    for (const ArrayParams& p :
         {paper_params(), ArrayParams{3, 2.5, 0.1, 1e4, 1.0}, ArrayParams{9, 0.3, 0.01, 777.0, 0.5}}) {
        const DerivedRates r = derive_rates(p);
        CHECK(r.kappa / r.xi == doctest::Approx(r.gamma / p.omega_c).epsilon(1e-15));
        CHECK(r.kappa / r.xi == doctest::Approx(2.0 / p.q_factor).epsilon(1e-15));
    }
}

TEST_CASE("config file round trip with alpha") {
    auto path = write_temp("cca_core_alpha.cfg",
                           "# reference parameters\n"
                           "n_cavities = 60\n"
                           "omega_c = 1.0\n"
                           "alpha = 3.235e-4\n"
                           "q_factor = 1.1e6\n"
                           "period = 1.0\n");
    const ArrayParams p = params_from_config(parse_config(path.string()));
    CHECK(p.n_cavities == 60);
    CHECK(p.alpha == 3.235e-4);
    std::filesystem::remove(path);
}

TEST_CASE("config file accepts xi instead of alpha") {
    auto path = write_temp("cca_core_xi.cfg",
                           "n_cavities = 60\n"
                           "xi = 6.47e-4\n"
                           "q_factor = 1.1e6\n");
    const ArrayParams p = params_from_config(parse_config(path.string()));
    CHECK(p.alpha == doctest::Approx(3.235e-4).epsilon(1e-15));
    CHECK(p.omega_c == 1.0);  // default
    CHECK(p.period == 1.0);   // default
    std::filesystem::remove(path);
}

TEST_CASE("config file rejections") {
    auto bad = [](const std::string& name, const std::string& body) {
        auto path = write_temp(name, body);
        CHECK_THROWS_AS(params_from_config(parse_config(path.string())), std::invalid_argument);
        std::filesystem::remove(path);
    };
    bad("cca_core_unknown.cfg", "n_cavities = 3\nq_factor = 1e4\nalpha = 0.1\nbogus = 1\n");
    bad("cca_core_both.cfg", "n_cavities = 3\nq_factor = 1e4\nalpha = 0.1\nxi = 0.2\n");
    bad("cca_core_dup.cfg", "n_cavities = 3\nn_cavities = 4\nq_factor = 1e4\nalpha = 0.1\n");
    bad("cca_core_missing.cfg", "n_cavities = 3\nalpha = 0.1\n");
    bad("cca_core_nonint.cfg", "n_cavities = 3.5\nq_factor = 1e4\nalpha = 0.1\n");
    bad("cca_core_noeq.cfg", "n_cavities 3\nq_factor = 1e4\nalpha = 0.1\n");
    CHECK_THROWS_AS(parse_config("/nonexistent/cca.cfg"), std::runtime_error);
}

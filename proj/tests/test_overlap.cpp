#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "cca/overlap.hpp"

using namespace cca::overlap;

namespace {

DefectLatticeSpec base_spec() {
    DefectLatticeSpec s;
    s.domain = 48.0;
    s.defect_center = 24.0;
    s.period = 6.0;
    return s;
}

double alpha_for(const DefectLatticeSpec& s) {
    const DielectricProfile1D p = build_profile(s);
    const LocalizedMode mode = solve_defect_mode(p);
    return overlap_alpha(p, mode, shifted_by_period(mode, p));
}

}  // namespace

TEST_CASE("defect mode is localized and in the expected range") {
    const DielectricProfile1D p = build_profile(base_spec());
    CHECK_NOTHROW(validate(p));
    const LocalizedMode mode = solve_defect_mode(p);
    CHECK(mode.participation_ratio < 0.2);
    CHECK(mode.frequency > 1.4);
    CHECK(mode.frequency < 2.0);
    // normalized to int eps_single |phi|^2 dx = 1
    double nrm = 0.0;
    for (size_t i = 0; i < mode.profile.size(); ++i)
        nrm += p.eps_single[i] * mode.profile[i] * mode.profile[i];
    nrm *= p.spacing;
    CHECK(std::abs(nrm - 1.0) <= 1e-10);
    // zero boundary values
    CHECK(mode.profile.front() == 0.0);
    CHECK(mode.profile.back() == 0.0);
}

TEST_CASE("uniform dielectric has no localized mode") {
    DielectricProfile1D p;
    p.spacing = 1.0 / 32;
    p.period = 6.0;
    p.eps_single.assign(1537, 3.0);
    p.eps_periodic.assign(1537, 3.0);
    CHECK_THROWS_AS(solve_defect_mode(p), std::runtime_error);
}

TEST_CASE("deeper defects localize harder") {
    DefectLatticeSpec shallow = base_spec();
    shallow.defect_depth = 0.5;
    DefectLatticeSpec deep = base_spec();
    deep.defect_depth = 0.9;
    const double pr_shallow = solve_defect_mode(build_profile(shallow)).participation_ratio;
    const double pr_deep = solve_defect_mode(build_profile(deep)).participation_ratio;
    CHECK(pr_deep < pr_shallow);
}

TEST_CASE("eigenvalue converges at second order in the grid spacing") {
    std::vector<double> freqs;
    for (double h : {1.0 / 32, 1.0 / 64, 1.0 / 128}) {
        DefectLatticeSpec s = base_spec();
        s.spacing = h;
        freqs.push_back(solve_defect_mode(build_profile(s)).frequency);
    }
    const double ratio = std::abs(freqs[0] - freqs[1]) / std::abs(freqs[1] - freqs[2]);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("overlap decays monotonically with the array period") {
    double prev = 1.0;
    for (double period : {3.0, 4.0, 5.0, 6.0, 7.0}) {
        DefectLatticeSpec s = base_spec();
        s.period = period;
        const double a = alpha_for(s);
        CHECK(a > 0.0);  // sign convention: positive tail overlap
        CHECK(std::abs(a) < prev);
        prev = std::abs(a);
    }
}

TEST_CASE("well-separated cavities have vanishing overlap") {
    DefectLatticeSpec s = base_spec();
    s.domain = 96.0;
    s.defect_center = 48.0;
    s.period = 24.0;
    CHECK(std::abs(alpha_for(s)) <= 1e-8);
}

TEST_CASE("overlap is invariant under translating the whole profile") {
    DefectLatticeSpec s = base_spec();
    s.domain = 64.0;
    s.defect_center = 32.0;
    const double a1 = alpha_for(s);
    s.defect_center = 33.0;  // shift by one lattice constant
    const double a2 = alpha_for(s);
    CHECK(std::abs(a1 - a2) <= 1e-10);
}

TEST_CASE("overlap is invariant under mirroring the profile") {
    DefectLatticeSpec s = base_spec();
    s.domain = 64.0;
    s.defect_center = 30.0;  // off centre so the mirror is a different array
    const DielectricProfile1D p = build_profile(s);
    DielectricProfile1D mirrored = p;
    std::reverse(mirrored.eps_single.begin(), mirrored.eps_single.end());
    std::reverse(mirrored.eps_periodic.begin(), mirrored.eps_periodic.end());
    const LocalizedMode m1 = solve_defect_mode(p);
    const LocalizedMode m2 = solve_defect_mode(mirrored);
    const double a1 = overlap_alpha(p, m1, shifted_by_period(m1, p));
    const double a2 = overlap_alpha(mirrored, m2, shifted_by_period(m2, mirrored));
    CHECK(std::abs(a1 - a2) <= 1e-9);
}

TEST_CASE("translated tails must stay on the grid") {
    DefectLatticeSpec s = base_spec();
    s.period = 36.0;  // pushes the mode centre past the boundary
    const DielectricProfile1D p = build_profile(s);
    const LocalizedMode mode = solve_defect_mode(p);
    CHECK_THROWS_AS(shifted_by_period(mode, p), std::runtime_error);
}

TEST_CASE("overlap rejects unnormalized modes") {
    const DielectricProfile1D p = build_profile(base_spec());
    LocalizedMode mode = solve_defect_mode(p);
    LocalizedMode shifted = shifted_by_period(mode, p);
    for (double& v : mode.profile) v *= 2.0;
    CHECK_THROWS_AS(overlap_alpha(p, mode, shifted), std::invalid_argument);
}

TEST_CASE("profile validation rejections") {
    const DielectricProfile1D good = build_profile(base_spec());

    DielectricProfile1D p = good;
    p.eps_single[10] = 0.5;  // below vacuum
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p = good;
    p.period = 6.01;  // not a multiple of the spacing
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p = good;
    p.eps_periodic[400] += 1e-6;  // breaks periodicity
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p = good;
    p.eps_single.resize(100);
    p.eps_periodic.resize(100);
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("profile CSV round trip preserves the defect mode") {
    const DielectricProfile1D p = build_profile(base_spec());
    const auto path = std::filesystem::temp_directory_path() / "cca_overlap_profile.csv";
    {
        std::ofstream out(path);
        out << profile_to_csv(p);
    }
    const DielectricProfile1D back = read_profile_csv(path.string(), p.period);
    CHECK(back.eps_single.size() == p.eps_single.size());
    CHECK(back.spacing == doctest::Approx(p.spacing).epsilon(1e-12));
    const double f1 = solve_defect_mode(p).frequency;
    const double f2 = solve_defect_mode(back).frequency;
    CHECK(std::abs(f1 - f2) <= 1e-9);
    std::filesystem::remove(path);
}

#include <doctest.h>

#include <algorithm>

#include "montesinos/notation.hpp"
#include "montesinos/surface.hpp"

using montesinos::BigInt;
using montesinos::CandidateSurface;
using montesinos::Edgepath;
using montesinos::EdgepathSystem;
using montesinos::Fraction;
using montesinos::Incompressibility;
using montesinos::MontesinosKnot;
using montesinos::Orientability;
using montesinos::Propagation;
using montesinos::RCyclePattern;
using montesinos::Tangle;
using montesinos::Vertex;
using montesinos::Weights;

namespace {

Edgepath single_edge_path(const Tangle& t, const Fraction& to) {
    Edgepath p{t, {}};
    p.edges.push_back(montesinos::make_edge(Vertex{t.slope}, Vertex{to}));
    return p;
}

EdgepathSystem family_system(long long p, long long q) {
    MontesinosKnot knot = montesinos::parse_knot("P(" + std::to_string(-p) + "," +
                                                 std::to_string(p) + "," + std::to_string(q) +
                                                 ")");
    std::vector<Edgepath> paths{
        single_edge_path(knot.tangles[0], Fraction(-1, p - 1)),
        single_edge_path(knot.tangles[1], Fraction(0)),
        single_edge_path(knot.tangles[2], Fraction(0)),
    };
    auto system = montesinos::solve_system(knot, paths);
    REQUIRE(system.has_value());
    return *system;
}

std::vector<CandidateSurface> analyzed_sweep(const std::string& knot_name) {
    std::vector<CandidateSurface> out;
    MontesinosKnot knot = montesinos::parse_knot(knot_name);
    for (const EdgepathSystem& system : montesinos::sweep_systems(knot))
        out.push_back(montesinos::analyze(system));
    return out;
}

}  // namespace

TEST_CASE("per-path twist on the P(-3,3,7) family system") {
    EdgepathSystem system = family_system(3, 7);
    CHECK(montesinos::twist(system.paths[0], system.weights[0], system.sheets) ==
          Fraction(1));
    CHECK(montesinos::twist(system.paths[1], system.weights[1], system.sheets) ==
          Fraction(-1, 2));
    CHECK(montesinos::twist(system.paths[2], system.weights[2], system.sheets) ==
          Fraction(-3, 2));

    Edgepath constant{system.knot.tangles[0], {}};
    CHECK(montesinos::twist(constant, Weights{4, 0}, 4) == Fraction(0));
}

TEST_CASE("total twist, slope denominator, boundary count on family instances") {
    EdgepathSystem seven = family_system(3, 7);
    CHECK(montesinos::total_twist(seven) == Fraction(-1));
    CHECK(montesinos::slope_denominator(seven) == 1);
    CHECK(montesinos::boundary_count(seven) == 4);

    EdgepathSystem twentythree = family_system(3, 23);
    CHECK(montesinos::total_twist(twentythree) == Fraction(-5, 3));
    CHECK(montesinos::slope_denominator(twentythree) == 3);
    CHECK(montesinos::boundary_count(twentythree) == 4);

    EdgepathSystem large = family_system(5, 29);
    CHECK(montesinos::boundary_count(large) == 8);

    // an all-constant system twists not at all
    MontesinosKnot knot = montesinos::parse_knot("P(-3,3,7)");
    EdgepathSystem still{knot,
                         {Edgepath{knot.tangles[0], {}}, Edgepath{knot.tangles[1], {}},
                          Edgepath{knot.tangles[2], {}}},
                         {Weights{1, 0}, Weights{1, 0}, Weights{1, 0}},
                         1};
    CHECK(montesinos::total_twist(still) == Fraction(0));
}

TEST_CASE("euler characteristic and genus integrality") {
    EdgepathSystem seven = family_system(3, 7);
    CHECK(montesinos::euler_characteristic(seven) == -4);
    CandidateSurface s = montesinos::analyze(seven);
    REQUIRE(s.genus.has_value());
    CHECK(*s.genus == 1);
    CHECK((2 - s.euler_characteristic - s.boundary_components) % 2 == 0);
}

TEST_CASE("r-cycle pattern matching") {
    using montesinos::r_cycle_match;
    CHECK(r_cycle_match({BigInt(0), BigInt(5), BigInt(7)}) == RCyclePattern::contains_zero);
    CHECK(r_cycle_match({BigInt(1), BigInt(1), BigInt(9)}) == RCyclePattern::ones_then_r);
    CHECK(r_cycle_match({BigInt(1), BigInt(2), BigInt(9)}) ==
          RCyclePattern::ones_two_then_r);
    CHECK_FALSE(r_cycle_match({BigInt(2), BigInt(2), BigInt(6)}).has_value());
    for (long long p = 4; p <= 8; ++p)
        for (long long q = 13; q <= 61; q += 2)
            CHECK_FALSE(r_cycle_match({BigInt(1), BigInt(p - 1), BigInt(q - 1)}).has_value());
}

TEST_CASE("pattern matching is rotation invariant") {
    std::vector<std::vector<BigInt>> cycles{
        {BigInt(0), BigInt(5), BigInt(7)},     {BigInt(1), BigInt(1), BigInt(9)},
        {BigInt(1), BigInt(2), BigInt(9)},     {BigInt(1), BigInt(3), BigInt(6)},
        {BigInt(1), BigInt(1), BigInt(2), BigInt(9)}, {BigInt(2), BigInt(2), BigInt(6)},
    };
    for (const auto& cycle : cycles) {
        auto base = montesinos::r_cycle_match(cycle);
        std::vector<BigInt> rotated = cycle;
        for (std::size_t k = 1; k < cycle.size(); ++k) {
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            CHECK(montesinos::r_cycle_match(rotated).has_value() == base.has_value());
        }
    }
}

TEST_CASE("incompressibility screen on family systems") {
    // p >= 4: the cycle (1, p-1, q-1) matches nothing
    for (long long p = 4; p <= 7; ++p) {
        long long q0 = (p - 1) * (p - 1) - (p - 1) + 1;
        auto screen = montesinos::incompressibility_screen(family_system(p, q0));
        CHECK(screen.verdict == Incompressibility::yes);
        CHECK_FALSE(screen.ambiguous);
    }
    // p = 3: cycle (1, 2, q-1) collides with the (1,...,1,2,rn) pattern;
    // passed with the ambiguity flag
    auto p3 = montesinos::incompressibility_screen(family_system(3, 7));
    CHECK(p3.verdict == Incompressibility::yes);
    CHECK(p3.ambiguous);
    REQUIRE(p3.matched.has_value());
    CHECK(*p3.matched == RCyclePattern::ones_two_then_r);
}

TEST_CASE("the same cycle outside the family shape is excluded") {
    // P(-2,3,7) all-paths-to-zero: cycle (1, 2, 6), not the family shape
    MontesinosKnot knot = montesinos::parse_knot("P(-2,3,7)");
    std::vector<Edgepath> paths{
        single_edge_path(knot.tangles[0], Fraction(0)),
        single_edge_path(knot.tangles[1], Fraction(0)),
        single_edge_path(knot.tangles[2], Fraction(0)),
    };
    auto system = montesinos::solve_system(knot, paths);
    REQUIRE(system.has_value());
    auto cycle = montesinos::r_cycle(*system);
    CHECK(cycle == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(6)});
    auto screen = montesinos::incompressibility_screen(*system);
    CHECK(screen.verdict == Incompressibility::excluded_by_r_cycle);
    CHECK_FALSE(screen.ambiguous);
}

TEST_CASE("orientability parity criterion") {
    CHECK(montesinos::orientable_by_parity(family_system(3, 15)));   // a=2, b=14
    CHECK(montesinos::orientable_by_parity(family_system(3, 7)));    // a=2, b=6
    CHECK_FALSE(montesinos::orientable_by_parity(family_system(4, 7)));  // a=3, b=6: g odd

    // outside the family shape the criterion is not proven: rejected
    MontesinosKnot knot = montesinos::parse_knot("P(-2,3,7)");
    std::vector<Edgepath> paths{
        single_edge_path(knot.tangles[0], Fraction(0)),
        single_edge_path(knot.tangles[1], Fraction(0)),
        single_edge_path(knot.tangles[2], Fraction(0)),
    };
    auto system = montesinos::solve_system(knot, paths);
    REQUIRE(system.has_value());
    CHECK_THROWS_AS(montesinos::orientable_by_parity(*system), std::invalid_argument);
}

TEST_CASE("propagation agrees with the parity criterion across the family") {
    for (long long p = 3; p <= 7; ++p) {
        long long a = p - 1;
        for (long long q = std::max(3LL, a * a - a + 1); q <= 41; q += 2) {
            EdgepathSystem system = family_system(p, q);
            bool parity = montesinos::orientable_by_parity(system);
            Propagation prop = montesinos::orientable_by_propagation(system);
            CHECK(prop != Propagation::unknown);
            CHECK(parity == (prop == Propagation::yes));
        }
    }
}

TEST_CASE("one-sheet systems follow the twisted-band parity rule") {
    // all twists odd: the spanning surface is orientable
    auto odd = analyzed_sweep("P(3,5,7)");
    bool found_orientable_seifert = false;
    for (const CandidateSurface& s : odd) {
        if (s.system.sheets == 1 && s.boundary_components == 1 &&
            s.orientable == Orientability::yes_by_propagation)
            found_orientable_seifert = true;
    }
    CHECK(found_orientable_seifert);

    // mixed parities: the all-to-zero system is one-sided
    MontesinosKnot knot = montesinos::parse_knot("P(-2,3,5)");
    std::vector<Edgepath> paths{
        single_edge_path(knot.tangles[0], Fraction(0)),
        single_edge_path(knot.tangles[1], Fraction(0)),
        single_edge_path(knot.tangles[2], Fraction(0)),
    };
    auto system = montesinos::solve_system(knot, paths);
    REQUIRE(system.has_value());
    CHECK(montesinos::orientable_by_propagation(*system) == Propagation::no);
}

TEST_CASE("sheet copies oriented with alternating signs satisfy every saddle") {
    // the saddle rule relates the two arcs of one copy; alternating the
    // copies keeps each pair aligned, so any single-tangle block checks out
    EdgepathSystem system = family_system(3, 15);
    CHECK(montesinos::orientable_by_propagation(system) == Propagation::yes);
    CHECK(montesinos::analyze(system).orientable == Orientability::yes_by_parity);
}

TEST_CASE("analyze on the full P(-3,3,7) sweep") {
    auto surfaces = analyzed_sweep("P(-3,3,7)");
    REQUIRE(surfaces.size() == 4);
    int incompressible = 0;
    for (const CandidateSurface& s : surfaces) {
        CHECK(s.boundary_components * s.slope_denominator == s.system.sheets);
        if (s.incompressible == Incompressibility::yes)
            ++incompressible;
    }
    CHECK(incompressible == 2);  // the one-sheet spanning surface and the family surface

    auto family = std::find_if(surfaces.begin(), surfaces.end(), [](const CandidateSurface& s) {
        return s.system.sheets == 4;
    });
    REQUIRE(family != surfaces.end());
    CHECK(family->twist == Fraction(-1));
    CHECK(family->slope_denominator == 1);
    CHECK(family->boundary_components == 4);
    CHECK(family->euler_characteristic == -4);
    REQUIRE(family->genus.has_value());
    CHECK(*family->genus == 1);
    CHECK(family->orientable == Orientability::yes_by_parity);
    CHECK(family->incompressible == Incompressibility::yes);
    CHECK(family->pattern_ambiguous);

    auto seifert = std::find_if(surfaces.begin(), surfaces.end(), [](const CandidateSurface& s) {
        return s.system.sheets == 1 && s.incompressible == Incompressibility::yes;
    });
    REQUIRE(seifert != surfaces.end());
    CHECK(seifert->boundary_components == 1);
    CHECK(seifert->euler_characteristic == -1);
    REQUIRE(seifert->genus.has_value());
    CHECK(*seifert->genus == 1);
}

TEST_CASE("a non-orientable candidate may pair an odd boundary count with q > 1") {
    // P(-3,3,9): the family surface has one boundary component of slope
    // denominator 5 and is one-sided, so the odd-count restriction does not
    // apply to it
    auto surfaces = analyzed_sweep("P(-3,3,9)");
    bool found = false;
    for (const CandidateSurface& s : surfaces) {
        if (s.system.sheets == 5) {
            CHECK(s.boundary_components == 1);
            CHECK(s.slope_denominator == 5);
            CHECK(s.orientable == Orientability::no);
            CHECK_FALSE(s.genus.has_value());
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("odd chi + b parity forces one-sidedness; foreign saddle types stay unknown") {
    auto surfaces = analyzed_sweep("M(1/3,2/5,-3/7)");
    REQUIRE(!surfaces.empty());
    bool saw_forced_no = false;
    for (const CandidateSurface& s : surfaces) {
        BigInt parity = 2 - s.euler_characteristic - s.boundary_components;
        if (parity % 2 != 0) {
            CHECK(s.orientable == Orientability::no);
            saw_forced_no = true;
        } else {
            // slopes like 2/5 carry saddle types outside the calibrated rules
            CHECK(s.orientable == Orientability::unknown);
        }
        CHECK((s.genus.has_value() == false));
    }
    CHECK(saw_forced_no);
}

TEST_CASE("meta property check") {
    // hand-built contradiction: orientable, three boundary components,
    // denominator two
    CandidateSurface bad;
    bad.system = family_system(3, 7);
    bad.boundary_components = 3;
    bad.slope_denominator = 2;
    bad.orientable = Orientability::yes_by_propagation;
    auto report = montesinos::meta_property_check({bad});
    CHECK(report.violations.size() == 1);

    // the same record without orientability is outside the hypotheses
    bad.orientable = Orientability::no;
    report = montesinos::meta_property_check({bad});
    CHECK(report.ok());
    CHECK(report.skipped_not_orientable == 1);

    // sweeps over both verification grids are violation-free
    std::vector<CandidateSurface> all;
    for (long long q = 7; q <= 31; q += 2)
        for (const CandidateSurface& s : analyzed_sweep("P(-3,3," + std::to_string(q) + ")"))
            all.push_back(s);
    for (long long t = 3; t <= 15; t += 2)
        for (const CandidateSurface& s : analyzed_sweep("P(-2,3," + std::to_string(t) + ")"))
            all.push_back(s);
    auto sweep_report = montesinos::meta_property_check(all);
    CHECK(sweep_report.ok());
    CHECK(sweep_report.orientable_checked > 0);
}

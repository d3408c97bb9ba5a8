#include <doctest.h>

#include <cmath>

#include "diamond/bounds.hpp"
#include "diamond/optim.hpp"
#include "diamond/regime.hpp"
#include "diamond/rng.hpp"

using namespace diamond;

namespace {
NetworkParams make(double sr1, double sr2, double rd1, double rd2, int T) {
    return NetworkParams{T, sr1, sr2, rd1, rd2, std::nullopt};
}
const NetworkParams kExample = make(4, 1, 2, 3, 3);
}  // namespace

TEST_CASE("two-variable objective") {
    SUBCASE("p = 0 keeps only the shared rd1 term") {
        const auto t = reduced_objective(0.0, 1.0, kExample);
        CHECK(t.min_value == doctest::Approx(4.0));
    }
    SUBCASE("p = 1, gc = 0") {
        const auto t = reduced_objective(1.0, 0.0, kExample);
        CHECK(t.term1 == doctest::Approx(6.0));
        CHECK(t.term2 == doctest::Approx(2.0));
        CHECK(t.min_value == doctest::Approx(2.0));
    }
    SUBCASE("intersection point of the worked example") {
        const auto t = reduced_objective(1.0 / 3.0, 0.0, kExample);
        CHECK(t.term1 == doctest::Approx(14.0 / 3.0));
        CHECK(t.term2 == doctest::Approx(14.0 / 3.0));
    }
    SUBCASE("range checks") {
        CHECK_THROWS_AS(reduced_objective(-0.1, 0.0, kExample), std::invalid_argument);
        CHECK_THROWS_AS(reduced_objective(0.5, 2.5, kExample), std::invalid_argument);
    }
}

TEST_CASE("closed-form solution per table case") {
    SUBCASE("case 1") {
        const auto s = solve_reduced_closed(kExample);
        CHECK(s.gamma_c == doctest::Approx(0.0));
        CHECK(s.p_lambda == doctest::Approx(1.0 / 3.0));
        CHECK(s.value == doctest::Approx(14.0 / 3.0));
        CHECK(s.active_term == ActiveTerm::Both);
    }
    SUBCASE("case 2.1") {
        const auto s = solve_reduced_closed(make(5, 1, 1, 3, 4));
        CHECK(s.gamma_c == doctest::Approx(1.0));
        CHECK(s.p_lambda == doctest::Approx(0.5));
    }
    SUBCASE("case 2.2 with the reduced power factor") {
        const auto s = solve_reduced_closed(make(5, 2, 1, 3, 5).with_snr(1e6));
        CHECK(s.p_lambda == doctest::Approx(1.0));
        CHECK(s.gamma_c == doctest::Approx(1.0));
        REQUIRE(s.c_r12_sq.has_value());
        CHECK(*s.c_r12_sq == doctest::Approx(1.0));  // snr^(3-2-1)
    }
    SUBCASE("intersection law at the optimum") {
        for (const NetworkParams& p :
             {kExample, make(5, 1, 1, 3, 4), make(5, 2, 1, 3, 5), make(4, 2, 2, 3.5, 6)}) {
            const auto s = solve_reduced_closed(p);
            if (s.active_term == ActiveTerm::Both && p.gamma_sr2 > 0)
                CHECK(s.p_lambda ==
                      doctest::Approx(p.gamma_sr2 / (p.gamma_rd2 - s.gamma_c)));
        }
    }
    SUBCASE("regime precondition") {
        CHECK_THROWS_AS(solve_reduced_closed(make(1, 4, 3, 2, 3)), std::invalid_argument);
    }
}

TEST_CASE("grid oracle") {
    SUBCASE("worked example at high resolution") {
        const auto s = solve_reduced_grid(kExample, 1001);
        CHECK(std::fabs(s.value - 14.0 / 3.0) < 1e-2);
        CHECK(std::fabs(s.p_lambda - 1.0 / 3.0) < 2e-3);
        CHECK(s.gamma_c == doctest::Approx(0.0));
    }
    SUBCASE("gamma_rd1 = 0 reduces to a one-dimensional scan") {
        const auto s = solve_reduced_grid(make(4, 1, 0, 3, 3), 101);
        CHECK(s.gamma_c == 0.0);
    }
    SUBCASE("coarse grids stay below the closed form") {
        const auto coarse = solve_reduced_grid(kExample, 2);
        CHECK(coarse.value <= solve_reduced_closed(kExample).value + 1e-12);
    }
    SUBCASE("resolution validated") {
        CHECK_THROWS_AS(solve_reduced_grid(kExample, 1), std::invalid_argument);
    }
}

TEST_CASE("closed form vs grid over random nontrivial instances") {
    int tested = 0;
    for (std::uint64_t trial = 0; tested < 60 && trial < 6000; ++trial) {
        const double sr1 = 5.0 * rng::uniform(808, trial * 5);
        const double sr2 = 5.0 * rng::uniform(808, trial * 5 + 1);
        const double rd1 = 5.0 * rng::uniform(808, trial * 5 + 2);
        const double rd2 = 5.0 * rng::uniform(808, trial * 5 + 3);
        const int T = 2 + static_cast<int>(6.0 * rng::uniform(808, trial * 5 + 4));
        const NetworkParams p = make(sr1, sr2, rd1, rd2, T);
        if (!in_nontrivial_regime(p)) continue;
        ++tested;
        const auto closed = solve_reduced_closed(p);
        const auto grid = solve_reduced_grid(p, 501);
        CHECK(std::fabs(closed.value - grid.value) <= 3.0 * grid_cell_bound(p, 501));
        // region reductions: the argmax respects both cuts up to one cell
        const double cell = p.gamma_rd1 / 500.0;
        CHECK(grid.gamma_c <=
              (T - 1.0) * (p.gamma_rd2 - p.gamma_rd1) + cell + 1e-12);
        CHECK(grid.gamma_c <= std::max(0.0, p.gamma_rd2 - p.gamma_sr2) + cell + 1e-12);
    }
    CHECK(tested == 60);
}

TEST_CASE("discretized LP") {
    SUBCASE("unit strengths stay under the Jensen cap") {
        const LinkStrengths rho{1.0, 1.0, 1.0};
        const int T = 3;
        const auto lp = solve_discretized_lp(rho, T, 0.5, 2.0 * T);
        CHECK(lp.value >= 0.0);
        // Jensen on the first cut with the 2T power budget: value <= T log2(3T).
        CHECK(lp.value <= T * std::log2(3.0 * T) + 1e-9);
        CHECK(lp.support_size <= 3);
    }
    SUBCASE("worked strengths, coarse grid, basic support") {
        const LinkStrengths rho{4.0, 16.0, 2.0};
        const auto lp = solve_discretized_lp(rho, 3, 0.5, 6.0);
        CHECK(lp.support_size <= 3);
        CHECK(lp.dist.mean_power() <= 2.0 * 3 + 1e-9);
        double total = 0.0;
        for (const auto& pt : lp.dist.points) total += pt.p;
        CHECK(total == doctest::Approx(1.0));
    }
    SUBCASE("LP value per log2(snr) tracks the closed form across two decades") {
        const NetworkParams p = make(4, 1, 2, 3, 3);
        const double closed = solve_reduced_closed(p).value;
        for (const double snr : {1e4, 1e6}) {
            const LinkStrengths rho = link_strengths(p.with_snr(snr));
            const auto lp = solve_discretized_lp(rho, p.T, 0.5, 6.0);
            const double slope = lp.value / std::log2(snr);
            CHECK(std::fabs(slope - closed) / closed < (snr >= 1e6 ? 0.10 : 0.25));
        }
    }
    SUBCASE("fine inverse-strength grid at small rho refines the coarse one") {
        // Spacing 1/rho_rd2^2 up to floor(rho_rd2^4)/rho_rd2^2, usable only
        // for rho_rd2^2 <= 8; the refinement gain stays within the 6-bit
        // discretization constant of the coarse answer.
        const LinkStrengths rho{2.0, 8.0, 2.0};
        const int T = 3;
        const double fine_step = 1.0 / rho.rho_rd2_sq;
        const double fine_max = std::floor(std::pow(rho.rho_rd2_sq, 2.0)) / rho.rho_rd2_sq;
        const auto fine = solve_discretized_lp(rho, T, fine_step, fine_max);
        const auto coarse = solve_discretized_lp(rho, T, 0.5, 2.0 * T);
        CHECK(fine.support_size <= 3);
        CHECK(fine.value >= coarse.value - 1e-9);  // coarse grid is a subset
        CHECK(fine.value - coarse.value <= 6.0);
    }
    SUBCASE("grid validation") {
        CHECK_THROWS_AS(solve_discretized_lp(LinkStrengths{1, 1, 1}, 3, 0.0, 1.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(solve_discretized_lp(LinkStrengths{1, 1, 1}, 3, 0.01, 100.0),
                        std::invalid_argument);  // too many points
    }
}

TEST_CASE("support reduction") {
    const LinkStrengths rho{4.0, 16.0, 2.0};
    SUBCASE("single point passes through unchanged") {
        MassPointDistribution d;
        d.points.push_back({3.0, 0.0, 1.5, 1.0});
        const auto r = reduce_to_two_points(d, rho, 3);
        REQUIRE(r.points.size() == 1);
        CHECK(r.points[0].a2 == doctest::Approx(3.0));
        CHECK(r.points[0].c2 == doctest::Approx(1.5));
    }
    SUBCASE("two points with equal c merge to the same c") {
        MassPointDistribution d;
        d.points.push_back({3.0, 0.0, 1.0, 0.5});
        d.points.push_back({1.0, 0.0, 1.0, 0.5});
        const auto r = reduce_to_two_points(d, rho, 3);
        REQUIRE(r.points.size() == 1);
        CHECK(r.points[0].c2 == doctest::Approx(1.0));
        // merged log term is preserved exactly
        const double before = 0.5 * std::log2(rho.rho_rd2_sq * 3.0 + 1.0) +
                              0.5 * std::log2(rho.rho_rd2_sq * 1.0 + 1.0);
        CHECK(std::log2(rho.rho_rd2_sq * r.points[0].a2 + 1.0) == doctest::Approx(before));
    }
    SUBCASE("case split then merge handles LP output") {
        const auto lp = solve_discretized_lp(rho, 3, 0.5, 6.0);
        const auto split = apply_case_split(lp.dist, rho);
        const auto two = reduce_to_two_points(split, rho, 3);
        CHECK(two.points.size() <= 2);
        CHECK(two.mean_power() <= split.mean_power() + 1e-9);
    }
    SUBCASE("unpartitionable input rejected") {
        MassPointDistribution d;
        d.points.push_back({1.0, 2.0, 3.0, 1.0});
        CHECK_THROWS_AS(reduce_to_two_points(d, rho, 3), std::invalid_argument);
    }
}

TEST_CASE("gradient bound check") {
    SUBCASE("bound certified at random points") {
        const LinkStrengths rho{2.0, 8.0, 2.0};
        const auto rep = grad_bound_check(rho, 3, 1000, 2024);
        CHECK(rep.pass);
        CHECK(rep.max_norm_parallel <= rep.norm_bound * 1.001);
        CHECK(rep.partial_bound == doctest::Approx(16.0));
    }
    SUBCASE("bound scales linearly with the strongest link") {
        const auto a = grad_bound_check(LinkStrengths{2.0, 8.0, 2.0}, 3, 10, 1);
        const auto b = grad_bound_check(LinkStrengths{2.0, 16.0, 2.0}, 3, 10, 1);
        CHECK(b.norm_bound == doctest::Approx(2.0 * a.norm_bound));
    }
}

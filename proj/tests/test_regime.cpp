#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "diamond/gdof.hpp"
#include "diamond/regime.hpp"
#include "diamond/rng.hpp"

using namespace diamond;

namespace {

NetworkParams make(double sr1, double sr2, double rd1, double rd2, int T = 3) {
    return NetworkParams{T, sr1, sr2, rd1, rd2, std::nullopt};
}

// Exponents realizing permutation index k: link ids listed in decreasing
// order get the values 4, 3, 2, 1.
constexpr std::array<std::array<int, 4>, 24> kOrderings = {{
    {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}, {1, 4, 3, 2},
    {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 3, 1, 4}, {2, 3, 4, 1}, {2, 4, 1, 3}, {2, 4, 3, 1},
    {3, 1, 2, 4}, {3, 1, 4, 2}, {3, 2, 1, 4}, {3, 2, 4, 1}, {3, 4, 1, 2}, {3, 4, 2, 1},
    {4, 1, 2, 3}, {4, 1, 3, 2}, {4, 2, 1, 3}, {4, 2, 3, 1}, {4, 3, 1, 2}, {4, 3, 2, 1},
}};

NetworkParams params_for_index(int idx) {
    double g[5] = {0, 0, 0, 0, 0};
    for (int pos = 0; pos < 4; ++pos) g[kOrderings[idx - 1][pos]] = 4.0 - pos;
    return make(g[1], g[2], g[3], g[4]);
}

struct Expected {
    RegimeKind kind;
    int relay;
    bool swapped;
};

Expected expected_for_index(int idx) {
    switch (idx) {
        case 13: case 14: case 17: case 23: return {RegimeKind::RelaySelectSrLimited, 1, false};
        case 1: case 3: case 4: case 7: return {RegimeKind::RelaySelectRdLimited, 1, false};
        case 5: case 6: case 19: case 20: return {RegimeKind::Nontrivial, 0, false};
        case 18: case 21: case 22: case 24: return {RegimeKind::RelaySelectSrLimited, 2, true};
        case 2: case 8: case 11: case 12: return {RegimeKind::RelaySelectRdLimited, 2, true};
        default: return {RegimeKind::Nontrivial, 0, true};
    }
}

}  // namespace

TEST_CASE("worked classification examples") {
    const Regime nt = classify(make(4, 1, 2, 3));
    CHECK(nt.kind == RegimeKind::Nontrivial);
    CHECK_FALSE(nt.swapped);

    const Regime rs = classify(make(2, 1, 3, 0));
    CHECK(rs.kind == RegimeKind::RelaySelectSrLimited);
    CHECK(rs.selected_relay == 1);
    CHECK_FALSE(rs.swapped);
}

TEST_CASE("all 24 strict orderings match the regime tables") {
    for (int idx = 1; idx <= 24; ++idx) {
        const NetworkParams p = params_for_index(idx);
        const Regime r = classify(p);
        const Expected e = expected_for_index(idx);
        CAPTURE(idx);
        CHECK(r.kind == e.kind);
        CHECK(r.selected_relay == e.relay);
        CHECK(r.swapped == e.swapped);
        CHECK(r.permutation_index == idx);
    }
}

TEST_CASE("full tie resolves to relay selection and all formulas agree") {
    const NetworkParams p = make(1, 1, 1, 1, 4);
    const Regime r = classify(p);
    CHECK(r.kind != RegimeKind::Nontrivial);
    CHECK(r.permutation_index == 1);

    const double expected = (1.0 - 1.0 / 4.0) * 1.0;
    CHECK(std::fabs(gdof_simple_bound(p) - expected) < 1e-9);
    CHECK(std::fabs(gdof_relay_selection(p).value - expected) < 1e-9);
    CHECK(std::fabs(gdof_nontrivial(p).value - expected) < 1e-9);
    CHECK(std::fabs(gdof_network(p).gdof - expected) < 1e-9);
}

TEST_CASE("canonicalize") {
    SUBCASE("mirror of the nontrivial example swaps back") {
        const auto [canon, swapped] = canonicalize(make(1, 4, 3, 2));
        CHECK(swapped);
        CHECK(canon.gamma_sr1 == 4);
        CHECK(canon.gamma_sr2 == 1);
        CHECK(canon.gamma_rd1 == 2);
        CHECK(canon.gamma_rd2 == 3);
    }
    SUBCASE("canonical input unchanged") {
        const auto [canon, swapped] = canonicalize(make(4, 1, 2, 3));
        CHECK_FALSE(swapped);
        CHECK(canon.gamma_sr1 == 4);
    }
    SUBCASE("idempotent") {
        const auto [canon, swapped] = canonicalize(make(1, 4, 3, 2));
        const auto [again, swapped2] = canonicalize(canon);
        CHECK(swapped);
        CHECK_FALSE(swapped2);
        CHECK(again.gamma_sr1 == canon.gamma_sr1);
    }
}

TEST_CASE("swap consistency on random strict orderings") {
    int tested = 0;
    for (std::uint64_t trial = 0; trial < 400; ++trial) {
        double g[4];
        bool distinct = true;
        for (int k = 0; k < 4; ++k) g[k] = 5.0 * rng::uniform(123, trial * 4 + k);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (std::fabs(g[a] - g[b]) < 1e-6) distinct = false;
        if (!distinct) continue;
        ++tested;
        const NetworkParams p = make(g[0], g[1], g[2], g[3]);
        const Regime r = classify(p);
        const Regime rs = classify(p.with_swapped_relays());
        CHECK(rs.kind == r.kind);
        CHECK(rs.swapped == !r.swapped);
        if (r.selected_relay != 0) CHECK(rs.selected_relay == 3 - r.selected_relay);
    }
    CHECK(tested > 300);
}

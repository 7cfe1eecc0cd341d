#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "kf/hfk_catalog.hpp"

using kf::AGrading;
using kf::HFKTable;
using kf::Int;
using kf::RefinedComparison;
using kf::RefinedInvariant;
using kf::TableKey;

namespace {

// Independent oracle: the symmetrized Alexander polynomial of the (2,q)
// torus knot (q odd, any sign) via exact division of the product formula,
// as a map from exponent to coefficient.
std::map<Int, Int> alexander_polynomial_T2(int q) {
    if (q < 0) q = -q; // mirror images share their Alexander polynomial
    // (t^q + 1) / (t + 1), then recentered by (q-1)/2.
    std::vector<Int> quotient(q, 0);
    // Long division of t^q + 1 by t + 1.
    std::vector<Int> rem(q + 1, 0);
    rem[q] = 1;
    rem[0] = 1;
    for (int d = q; d >= 1; --d) {
        const Int lead = rem[d];
        if (lead == 0) continue;
        quotient[d - 1] = lead;
        rem[d] -= lead;
        rem[d - 1] -= lead;
    }
    REQUIRE(rem == std::vector<Int>(q + 1, 0));
    std::map<Int, Int> out;
    const int shift = (q - 1) / 2;
    for (int d = 0; d < q; ++d)
        if (quotient[d] != 0) out[Int(d - shift)] = quotient[d];
    return out;
}

std::map<Int, Int> euler_characteristic(const HFKTable& t) {
    std::map<Int, Int> chi;
    for (const auto& [key, d] : t.entries) {
        const Int sign = (key.maslov % 2 == 0) ? Int(d) : Int(-int(d));
        chi[key.alexander.total()] += sign;
    }
    for (auto it = chi.begin(); it != chi.end();)
        it = it->second == 0 ? chi.erase(it) : std::next(it);
    return chi;
}

} // namespace

TEST_CASE("hat tables of (2,m) torus knots") {
    const HFKTable neg = kf::hat_table_T2(-7);
    CHECK(neg.total_dimension() == 7);
    for (int s = -3; s <= 3; ++s)
        CHECK(neg.dim(AGrading(Int(s)), Int(3 + s)) == 1);

    const HFKTable pos = kf::hat_table_T2(7);
    CHECK(pos.total_dimension() == 7);
    for (int s = -3; s <= 3; ++s)
        CHECK(pos.dim(AGrading(Int(s)), Int(s - 3)) == 1);

    for (int n = 1; n <= 7; ++n)
        CHECK(kf::hat_table_T2(-(2 * n + 1)).total_dimension() ==
              std::size_t(2 * n + 1));

    CHECK_THROWS_AS(kf::hat_table_T2(4), kf::Error);
    CHECK_THROWS_AS(kf::hat_table_T2(1), kf::Error);
    CHECK_THROWS_AS(kf::hat_table_T2(-1), kf::Error);
}

TEST_CASE("minus tables of (2,m) torus knots") {
    const HFKTable neg = kf::minus_table_T2(-5);
    REQUIRE(neg.tower.has_value());
    CHECK(neg.tower->alexander == 2);
    CHECK(neg.tower->maslov == 4);
    REQUIRE(neg.torsion.size() == 2);
    CHECK(neg.torsion[0].alexander == 1);
    CHECK(neg.torsion[0].maslov == 3);
    CHECK(neg.torsion[1].alexander == -1);
    CHECK(neg.torsion[1].maslov == 1);

    const HFKTable pos = kf::minus_table_T2(5);
    REQUIRE(pos.tower.has_value());
    CHECK(pos.tower->alexander == -2);
    CHECK(pos.tower->maslov == -4);
    REQUIRE(pos.torsion.size() == 2);
    CHECK(pos.torsion[0].alexander == 2);
    CHECK(pos.torsion[0].maslov == 0);
    CHECK(pos.torsion[1].alexander == 0);
    CHECK(pos.torsion[1].maslov == -2);

    // Torsion count n-1 for the (2, 2n-1) knot: one class per knot of the
    // two-parameter family with k+l = n-2.
    for (int n = 2; n <= 8; ++n)
        CHECK(kf::minus_table_T2(2 * n - 1).torsion.size() ==
              std::size_t(n - 1));
}

TEST_CASE("hat tables collapse from minus tables") {
    // The U = 1 long-exact-sequence bookkeeping: hat dimensions are the
    // minus-module generators together with a (-1,-1)-shifted copy of each
    // U-kernel generator.  With the stored torsion orders this reproduces
    // the hat closed form entry by entry.
    for (int m = -15; m <= 15; m += 2) {
        if (m == 1 || m == -1) continue;
        const HFKTable minus = kf::minus_table_T2(m);
        std::map<TableKey, unsigned> expected;
        expected[TableKey{AGrading(minus.tower->alexander),
                          minus.tower->maslov}] += 1;
        for (const auto& g : minus.torsion) {
            expected[TableKey{AGrading(g.alexander), g.maslov}] += 1;
            const Int shift(g.order - 1);
            expected[TableKey{AGrading(g.alexander - shift - 1),
                              g.maslov - 2 * shift - 1}] += 1;
        }
        CHECK(kf::hat_table_T2(m).entries == expected);
    }
}

TEST_CASE("hat symmetry and Euler characteristic oracle") {
    for (int m = -15; m <= 15; m += 2) {
        if (m == 1 || m == -1) continue;
        const HFKTable t = kf::hat_table_T2(m);
        const auto dims = t.dims_by_alexander_total();
        for (const auto& [s, d] : dims) {
            const auto it = dims.find(-s);
            REQUIRE(it != dims.end());
            CHECK(it->second == d);
        }
        CHECK(euler_characteristic(t) == alexander_polynomial_T2(m));
    }
}

TEST_CASE("mirror reflection of hat tables") {
    for (int m = 3; m <= 15; m += 2) {
        const HFKTable t = kf::hat_table_T2(m);
        const HFKTable r = kf::hat_table_T2(-m);
        std::map<TableKey, unsigned> reflected;
        for (const auto& [key, d] : t.entries)
            reflected[TableKey{AGrading(-key.alexander.s1), -key.maslov}] += d;
        CHECK(reflected == r.entries);
    }
}

TEST_CASE("Künneth table of the (2,7) and (2,9) connected sum") {
    const HFKTable k =
        kf::kunneth_table(kf::hat_table_T2(7), kf::hat_table_T2(9));
    // At total Alexander grading 5 exactly three one-dimensional pieces.
    std::map<std::pair<Int, Int>, unsigned> slots;
    std::set<Int> maslovs;
    for (const auto& [key, d] : k.entries) {
        if (key.alexander.total() != 5) continue;
        slots[{key.alexander.s1, *key.alexander.s2}] += d;
        maslovs.insert(key.maslov);
    }
    const std::map<std::pair<Int, Int>, unsigned> expected = {
        {{Int(3), Int(2)}, 1}, {{Int(2), Int(3)}, 1}, {{Int(1), Int(4)}, 1}};
    CHECK(slots == expected);
    CHECK(maslovs == std::set<Int>{Int(-2)});

    // Marginal sums convolve the single-variable dimension sequences.
    const auto d1 = kf::hat_table_T2(7).dims_by_alexander_total();
    const auto d2 = kf::hat_table_T2(9).dims_by_alexander_total();
    std::map<Int, std::size_t> conv;
    for (const auto& [s1, a] : d1)
        for (const auto& [s2, b] : d2) conv[s1 + s2] += a * b;
    CHECK(k.dims_by_alexander_total() == conv);

    // Total dimension is multiplicative; the unknot acts as the identity.
    CHECK(k.total_dimension() == 63);
    const HFKTable u =
        kf::kunneth_table(kf::hat_table_unknot(), kf::hat_table_T2(-7));
    CHECK(u.total_dimension() == 7);
    for (const auto& [key, d] : u.entries) {
        CHECK(key.alexander.s1 == 0);
        CHECK(kf::hat_table_T2(-7).dim(AGrading(*key.alexander.s2),
                                       key.maslov) == d);
    }

    CHECK_THROWS_AS(kf::kunneth_table(kf::minus_table_T2(-7), u), kf::Error);
    CHECK_THROWS_AS(kf::kunneth_table(k, kf::hat_table_unknot()), kf::Error);
}

TEST_CASE("refined comparison") {
    const HFKTable k =
        kf::kunneth_table(kf::hat_table_T2(7), kf::hat_table_T2(9));
    const RefinedInvariant a{Int(3), Int(2), Int(-2), true};
    const RefinedInvariant b{Int(1), Int(4), Int(-2), true};
    CHECK(kf::refined_compare(a, b) == RefinedComparison::distinct);
    CHECK(kf::refined_compare(a, a, &k) == RefinedComparison::equal);
    CHECK(kf::refined_compare(a, a) == RefinedComparison::inconclusive);

    // Same position, different Maslov: distinct.
    RefinedInvariant c = a;
    c.maslov = Int(10);
    CHECK(kf::refined_compare(a, c) == RefinedComparison::distinct);

    // A two-dimensional slot cannot certify equality.
    HFKTable wide;
    wide.variant = HFKTable::Variant::hat;
    wide.entries[TableKey{AGrading(Int(0), Int(0)), Int(0)}] = 2;
    const RefinedInvariant w{Int(0), Int(0), Int(0), true};
    CHECK(kf::refined_compare(w, w, &wide) == RefinedComparison::inconclusive);

    const RefinedInvariant zero{Int(0), Int(0), std::nullopt, false};
    CHECK_THROWS_AS(kf::refined_compare(zero, a), kf::Error);
}

TEST_CASE("d3 bidegree bookkeeping") {
    // The (0,0) knot pairs with the single torsion class of the (2,3)
    // torus knot at (1, 0): 2·1 - 0 = 2·0 + 2.
    CHECK(kf::d3_grading_check(0, 0, Int(1), Int(0)));
    CHECK_FALSE(kf::d3_grading_check(0, 0, Int(1), Int(2)));

    // Each (k,l) picks out exactly one torsion class of its (2, 2n-1)
    // module, n = k+l+2.
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l) {
            const int n = k + l + 2;
            const HFKTable t = kf::minus_table_T2(2 * n - 1);
            int matches = 0;
            for (const auto& g : t.torsion)
                if (kf::d3_grading_check(k, l, g.alexander, g.maslov))
                    ++matches;
            CHECK(matches == 1);
        }
}

TEST_CASE("table JSON export") {
    const nlohmann::json j = kf::minus_table_T2(-5).to_json();
    CHECK(j["variant"] == "minus");
    CHECK(j["tower"]["A"] == 2);
    CHECK(j["torsion"].size() == 2);
    const nlohmann::json h = kf::hat_table_T2(3).to_json();
    CHECK(h["variant"] == "hat");
    CHECK(h["entries"].size() == 3);
}

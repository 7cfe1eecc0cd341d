#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kf/fixtures.hpp"
#include "kf/surgery.hpp"

using kf::ClassicalInvariants;
using kf::DistinguishedKnot;
using kf::Int;
using kf::Rat;
using kf::RatMatrix;
using kf::SurgeryComponent;
using kf::SurgeryPresentation;

namespace {

// Renumber components by `perm` (new index -> old index), optionally
// reversing the orientation of a subset: orientation reversal negates the
// component's rot0 and all its linking numbers, and preserves tb0, the
// framing, and every invariant of the presentation.
SurgeryPresentation reencode(const SurgeryPresentation& p,
                             const std::vector<std::size_t>& perm,
                             const std::vector<bool>& reverse) {
    const std::size_t n = p.size();
    SurgeryPresentation q;
    q.components.resize(n);
    q.linking.assign(n, std::vector<Int>(n, Int(0)));
    std::vector<int> eps(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (reverse[i]) eps[i] = -1;
    for (std::size_t i = 0; i < n; ++i) {
        q.components[i] = p.components[perm[i]];
        q.components[i].rot0 *= eps[perm[i]];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                q.linking[i][j] =
                    Int(eps[perm[i]] * eps[perm[j]]) * p.linking[perm[i]][perm[j]];
    if (p.knot) {
        DistinguishedKnot knot = *p.knot;
        knot.linkings.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            knot.linkings[i] = Int(eps[perm[i]]) * p.knot->linkings[perm[i]];
        q.knot = knot;
    }
    return q;
}

// Independent evaluation of tb via the determinant-ratio form.
Rat tb_by_det_ratio(const SurgeryPresentation& p) {
    const Rat num = kf::det(kf::framed_linking_matrix(p, true, Rat(0)));
    const Rat den = kf::det(kf::framed_linking_matrix(p));
    return Rat(p.knot->tb0) + num / den;
}

}  // namespace

TEST_CASE("empty surgery link echoes the knot's invariants") {
    SurgeryPresentation p;
    p.knot = DistinguishedKnot{Int(-1), Int(0), {}};
    CHECK(kf::tb_after_surgery(p) == Rat(-1));
    CHECK(kf::rot_after_surgery(p) == Rat(0));
    CHECK(kf::d3_invariant(p) == Rat(0));
    CHECK(kf::framed_linking_matrix(p).rows() == 0);
}

TEST_CASE("two-unknot framed linking matrix") {
    SurgeryPresentation p;
    p.components = {{Int(-1), Int(0), +1}, {Int(-1), Int(0), +1}};
    p.linking = {{Int(0), Int(1)}, {Int(1), Int(0)}};
    const RatMatrix m = kf::framed_linking_matrix(p);
    CHECK(m.at(0, 0) == Rat(0));
    CHECK(m.at(0, 1) == Rat(1));
    CHECK(m.at(1, 0) == Rat(1));
    CHECK(m.at(1, 1) == Rat(0));
}

TEST_CASE("single (+1)-surgery on the standard unknot has singular matrix") {
    SurgeryPresentation p;
    p.components = {{Int(-1), Int(0), +1}};
    p.linking = {{Int(0)}};
    CHECK_THROWS_AS(kf::d3_invariant(p), kf::Error);
    p.knot = DistinguishedKnot{Int(-1), Int(0), {Int(0)}};
    CHECK_THROWS_AS(kf::tb_after_surgery(p), kf::Error);
}

TEST_CASE("self-linking convention") {
    CHECK(kf::self_linking(Rat(-31), Rat(-40)) == Rat(9));
    CHECK(kf::self_linking(Rat(-1), Rat(0)) == Rat(-1));
}

TEST_CASE("first torus-knot family: d3 and signature") {
    for (int n = 0; n <= 8; ++n) {
        const SurgeryPresentation p = kf::fixtures::surgery_ln(n);
        const RatMatrix m = kf::framed_linking_matrix(p);
        const Rat d = kf::det(m);
        CHECK((d == Rat(1) || d == Rat(-1)));
        CHECK(kf::signature(m) == -n - 1);
        CHECK(kf::d3_invariant(p) == Rat(1 - 2 * n));
    }
}

TEST_CASE("first torus-knot family: frozen tb/rot and re-encoding agreement") {
    std::mt19937 rng(20260821u);
    for (int n = 0; n <= 6; ++n) {
        const SurgeryPresentation p = kf::fixtures::surgery_ln(n);
        const Rat tb = kf::tb_after_surgery(p);
        const Rat rot = kf::rot_after_surgery(p);
        CHECK(tb == Rat(n - 2));
        CHECK(rot == Rat(3 * n - 3));
        CHECK(kf::self_linking(tb, rot) == Rat(1 - 2 * n));

        // Independent re-encoding: random renumbering plus orientation
        // reversal of a random subset of components leaves everything fixed.
        std::vector<std::size_t> perm(p.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<bool> rev(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) rev[i] = rng() % 2 == 0;
        const SurgeryPresentation q = reencode(p, perm, rev);
        CHECK(kf::tb_after_surgery(q) == tb);
        CHECK(kf::rot_after_surgery(q) == rot);
        CHECK(kf::d3_invariant(q) == kf::d3_invariant(p));
        CHECK(kf::signature(kf::framed_linking_matrix(q)) ==
              kf::signature(kf::framed_linking_matrix(p)));
    }
}

TEST_CASE("two-parameter family: tb, rot, d3 pins") {
    for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
            const SurgeryPresentation p = kf::fixtures::surgery_lkl(k, l);
            const Rat d = kf::det(kf::framed_linking_matrix(p));
            CHECK((d == Rat(1) || d == Rat(-1)));
            CHECK(kf::tb_after_surgery(p) == Rat(-4 * (k + l) - 6));
            CHECK(kf::rot_after_surgery(p) == Rat(-6 * l - 2 * k - 7));
            CHECK(kf::d3_invariant(p) == Rat(2 * l + 2));
        }
    }
    // The wider supported range stays consistent.
    for (int k = 4; k <= 6; ++k) {
        const SurgeryPresentation p = kf::fixtures::surgery_lkl(k, 6);
        CHECK(kf::tb_after_surgery(p) == Rat(-4 * (k + 6) - 6));
        CHECK(kf::rot_after_surgery(p) == Rat(-6 * 6 - 2 * k - 7));
        CHECK(kf::d3_invariant(p) == Rat(14));
    }
}

TEST_CASE("determinant-ratio form of tb agrees with the solve form") {
    for (int n = 0; n <= 4; ++n) {
        const SurgeryPresentation p = kf::fixtures::surgery_ln(n);
        CHECK(tb_by_det_ratio(p) == kf::tb_after_surgery(p));
    }
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            const SurgeryPresentation p = kf::fixtures::surgery_lkl(k, l);
            CHECK(tb_by_det_ratio(p) == kf::tb_after_surgery(p));
        }
}

TEST_CASE("connected sums reproduce the composite invariants") {
    const ClassicalInvariants a =
        kf::classical_invariants(kf::fixtures::surgery_lkl(0, 2));
    const ClassicalInvariants b =
        kf::classical_invariants(kf::fixtures::surgery_lkl(1, 2));
    CHECK(a.tb == Rat(-14));
    CHECK(a.rot == Rat(-19));
    CHECK(*a.d3 == Rat(6));
    CHECK(b.tb == Rat(-18));
    CHECK(b.rot == Rat(-21));
    CHECK(*b.d3 == Rat(6));

    const ClassicalInvariants s1 = kf::connected_sum(a, b);
    CHECK(s1.tb == Rat(-31));
    CHECK(s1.rot == Rat(-40));
    CHECK(s1.sl == Rat(9));
    CHECK(*s1.d3 == Rat(12));

    const ClassicalInvariants c =
        kf::classical_invariants(kf::fixtures::surgery_lkl(1, 1));
    const ClassicalInvariants d =
        kf::classical_invariants(kf::fixtures::surgery_lkl(0, 3));
    const ClassicalInvariants s2 = kf::connected_sum(c, d);
    CHECK(s2.tb == Rat(-31));
    CHECK(s2.rot == Rat(-40));
    CHECK(s2.sl == s1.sl);
    CHECK(*s2.d3 == Rat(12));

    // Two standard unknots.
    const ClassicalInvariants u{Rat(-1), Rat(0), Rat(-1), std::nullopt};
    const ClassicalInvariants su = kf::connected_sum(u, u);
    CHECK(su.tb == Rat(-1));
    CHECK(su.rot == Rat(0));
    CHECK_FALSE(su.d3.has_value());
}

TEST_CASE("tb is independent of the components' rotation numbers") {
    std::mt19937 rng(7u);
    for (int n : {1, 3}) {
        SurgeryPresentation p = kf::fixtures::surgery_ln(n);
        const Rat tb = kf::tb_after_surgery(p);
        for (int trial = 0; trial < 5; ++trial) {
            SurgeryPresentation q = p;
            for (auto& c : q.components)
                c.rot0 = Int(static_cast<int>(rng() % 9) - 4);
            CHECK(kf::tb_after_surgery(q) == tb);
        }
    }
}

TEST_CASE("rot is independent of component tb0 at fixed framings") {
    // Trading tb0 for the surgery sign keeps a_i = tb0 + sign fixed, and
    // rot depends on the framings only through M.
    const SurgeryPresentation p = kf::fixtures::surgery_lkl(1, 1);
    const Rat rot = kf::rot_after_surgery(p);
    SurgeryPresentation q = p;
    for (auto& c : q.components) {
        c.tb0 += 2 * c.sign;
        c.sign = -c.sign;
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(q.components[i].framing() == p.components[i].framing());
    CHECK(kf::rot_after_surgery(q) == rot);
    CHECK(kf::tb_after_surgery(q) == kf::tb_after_surgery(p));
}

TEST_CASE("reversing the distinguished knot negates rot and fixes tb") {
    for (int n : {1, 2}) {
        SurgeryPresentation p = kf::fixtures::surgery_ln(n);
        SurgeryPresentation q = p;
        q.knot->rot0 = -q.knot->rot0;
        for (auto& e : q.knot->linkings) e = -e;
        CHECK(kf::tb_after_surgery(q) == kf::tb_after_surgery(p));
        CHECK(kf::rot_after_surgery(q) == -kf::rot_after_surgery(p));
    }
}

TEST_CASE("d3 is invariant under component permutation") {
    std::mt19937 rng(99u);
    const SurgeryPresentation p = kf::fixtures::surgery_lkl(2, 2);
    const Rat d3 = kf::d3_invariant(p);
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const SurgeryPresentation q =
            reencode(p, perm, std::vector<bool>(p.size(), false));
        CHECK(kf::d3_invariant(q) == d3);
    }
}

TEST_CASE("unimodular fixtures give integer tb and rot") {
    for (int n = 0; n <= 5; ++n) {
        const SurgeryPresentation p = kf::fixtures::surgery_ln(n);
        CHECK(kf::is_integer(kf::tb_after_surgery(p)));
        CHECK(kf::is_integer(kf::rot_after_surgery(p)));
    }
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            const SurgeryPresentation p = kf::fixtures::surgery_lkl(k, l);
            CHECK(kf::is_integer(kf::tb_after_surgery(p)));
            CHECK(kf::is_integer(kf::rot_after_surgery(p)));
        }
}

TEST_CASE("JSON round trip and validation") {
    const SurgeryPresentation p = kf::fixtures::surgery_lkl(1, 2);
    const SurgeryPresentation q = SurgeryPresentation::from_json(p.to_json());
    CHECK(q == p);
    CHECK(kf::tb_after_surgery(q) == kf::tb_after_surgery(p));

    nlohmann::json bad = p.to_json();
    bad["linking"][0][1] = 5;  // breaks symmetry
    CHECK_THROWS_AS(SurgeryPresentation::from_json(bad), kf::Error);

    nlohmann::json diag = p.to_json();
    diag["linking"][2][2] = 1;  // nonzero diagonal
    CHECK_THROWS_AS(SurgeryPresentation::from_json(diag), kf::Error);

    nlohmann::json missing = p.to_json();
    missing.erase("components");
    CHECK_THROWS_AS(SurgeryPresentation::from_json(missing), kf::Error);
}

TEST_CASE("rot reduces to r0 when all component rotations vanish") {
    SurgeryPresentation p = kf::fixtures::surgery_ln(2);
    for (auto& c : p.components) c.rot0 = Int(0);
    CHECK(kf::rot_after_surgery(p) == Rat(p.knot->rot0));
}

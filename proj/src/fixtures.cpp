#include "kf/fixtures.hpp"

#include <cstddef>
#include <vector>

namespace kf::fixtures {

namespace {

void set_lk(SurgeryPresentation& p, std::size_t i, std::size_t j, Int v) {
    p.linking[i][j] = v;
    p.linking[j][i] = v;
}

}  // namespace

SurgeryPresentation surgery_ln(int n) {
    if (n < 0) throw Error::bad_input("surgery_ln: n must be >= 0");
    SurgeryPresentation p;
    // Components: two (+1)-curves, one (-1)-curve, and n parallel copies of
    // a fourth (-1)-curve; copies link each other by their contact framing.
    p.components = {
        {Int(-3), Int(-2), +1},  // A
        {Int(-2), Int(-1), +1},  // B
        {Int(-2), Int(-1), -1},  // C
    };
    for (int i = 0; i < n; ++i) p.components.push_back({Int(-3), Int(0), -1});  // D_i
    const std::size_t N = p.components.size();
    p.linking.assign(N, std::vector<Int>(N, Int(0)));
    set_lk(p, 0, 1, Int(-1));
    set_lk(p, 0, 2, Int(-2));
    set_lk(p, 1, 2, Int(-2));
    for (std::size_t d = 3; d < N; ++d) {
        set_lk(p, 0, d, Int(-2));
        set_lk(p, 1, d, Int(0));
        set_lk(p, 2, d, Int(-1));
        for (std::size_t e = d + 1; e < N; ++e) set_lk(p, d, e, Int(-3));
    }
    DistinguishedKnot knot;
    knot.tb0 = Int(-1);
    knot.rot0 = Int(-2);
    knot.linkings.assign(N, Int(0));
    knot.linkings[2] = Int(1);  // links the (-1)-curve C once
    p.knot = knot;
    p.validate();
    return p;
}

SurgeryPresentation surgery_lkl(int k, int l) {
    if (k < 0 || l < 0) throw Error::bad_input("surgery_lkl: k and l must be >= 0");
    SurgeryPresentation p;
    // Components: two fixed (+1)-curves and one fixed (-1)-curve, then
    // l parallel copies of a (+1)-curve P and k parallel copies of a
    // (+1)-curve K.
    p.components = {
        {Int(-2), Int(-1), +1},  // A
        {Int(-2), Int(-1), +1},  // B
        {Int(-1), Int(0), -1},   // C
    };
    for (int i = 0; i < l; ++i) p.components.push_back({Int(-2), Int(1), +1});  // P_i
    for (int i = 0; i < k; ++i) p.components.push_back({Int(-1), Int(0), +1});  // K_i
    const std::size_t N = p.components.size();
    const std::size_t pbase = 3, kbase = 3 + static_cast<std::size_t>(l);
    p.linking.assign(N, std::vector<Int>(N, Int(0)));
    set_lk(p, 0, 2, Int(-1));
    for (std::size_t i = pbase; i < kbase; ++i) {
        set_lk(p, 0, i, Int(-1));
        set_lk(p, 1, i, Int(-1));
        set_lk(p, 2, i, Int(-1));
        for (std::size_t j = i + 1; j < kbase; ++j) set_lk(p, i, j, Int(-2));
    }
    for (std::size_t i = kbase; i < N; ++i) {
        set_lk(p, 2, i, Int(-1));
        for (std::size_t j = i + 1; j < N; ++j) set_lk(p, i, j, Int(-1));
    }
    DistinguishedKnot knot;
    knot.tb0 = Int(-6);
    knot.rot0 = Int(-7);
    knot.linkings.assign(N, Int(0));
    for (std::size_t i = pbase; i < kbase; ++i) knot.linkings[i] = Int(2);
    for (std::size_t i = kbase; i < N; ++i) knot.linkings[i] = Int(-2);
    p.knot = knot;
    p.validate();
    return p;
}

}  // namespace kf::fixtures

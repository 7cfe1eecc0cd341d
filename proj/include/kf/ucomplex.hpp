#ifndef KF_UCOMPLEX_HPP
#define KF_UCOMPLEX_HPP

// Bigraded chain complexes over F2 and F2[U], with homology as a graded
// F2[U]-module, U-torsion queries, the U = 1 specialization, tensor
// products, and quotients by subcomplexes.  Differentials are recorded as
// arrows x -> y weighted by a power of U; over F2 all weights vanish and U
// acts as zero on homology.

#include "kf/rational.hpp"
#include "kf/upoly.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kf {

enum class CoeffMode { F2, F2U };

// Alexander grading: a single integer, or a pair for complexes of connected
// sums (each tensor factor contributes one coordinate).
struct AGrading {
    Int s1;
    std::optional<Int> s2;

    AGrading() : s1(0) {}
    explicit AGrading(Int a) : s1(std::move(a)) {}
    AGrading(Int a, Int b) : s1(std::move(a)), s2(std::move(b)) {}

    bool bigraded() const { return s2.has_value(); }
    Int total() const { return s2 ? s1 + *s2 : s1; }

    bool operator==(const AGrading& other) const = default;
};

struct UGenerator {
    std::string name;
    AGrading alexander;
    std::optional<Int> maslov;
};

// One term of the differential: the coefficient of `to` in the boundary of
// `from` is U^u_power (1 when u_power = 0).
struct UArrow {
    std::size_t from = 0;
    std::size_t to = 0;
    unsigned u_power = 0;

    bool operator==(const UArrow& other) const = default;
};

class UComplex {
public:
    CoeffMode mode = CoeffMode::F2;
    std::vector<UGenerator> generators;
    std::vector<UArrow> arrows;
    // Marked cycles (e.g. the distinguished generator carrying a Legendrian
    // invariant), each a formal sum of generators.
    std::vector<std::vector<std::size_t>> marked;

    std::size_t size() const { return generators.size(); }

    // Index of the generator with the given name; throws bad_input when
    // absent or ambiguous.
    std::size_t index_of(const std::string& name) const;

    // Structural checks: index ranges, grading compatibility along arrows
    // (A(from) = A(to) - u, and M(from) = M(to) + 1 - 2u where Maslov data
    // is present), no duplicate or self arrows, marked entries in range,
    // and d^2 = 0.  Grading violations and malformed references are
    // bad_input; a differential that fails to square to zero is reported as
    // a computation error.
    void validate() const;

    // Square matrix D with D[to][from] = U^{u_power}; columns hold
    // boundaries.
    UPolyMatrix boundary_matrix() const;

    static UComplex from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Coordinates of a homology class in the basis of a HomologyModule:
// polynomial coefficients on the free towers, and on each torsion piece a
// coefficient reduced modulo U^order.
struct HClass {
    std::vector<UPoly> tower;
    std::vector<UPoly> torsion;

    bool is_zero() const;
    bool operator==(const HClass& other) const = default;
};

// Graded F2[U]-module decomposition of homology.  In F2 mode every summand
// is one-dimensional: towers are absent and all torsion orders equal 1.
// Basis ordering is canonical: descending total Alexander grading, then
// descending Maslov, then input order.
struct HomologyModule {
    struct Tower {
        AGrading alexander;
        std::optional<Int> maslov;
    };
    struct TorsionPiece {
        AGrading alexander;
        std::optional<Int> maslov;
        unsigned order = 1; // summand is F2[U] / U^order
    };

    CoeffMode mode = CoeffMode::F2;
    std::vector<Tower> free_towers;
    std::vector<TorsionPiece> torsion;
    // Images of the complex's marked cycles, aligned with UComplex::marked.
    std::vector<HClass> class_coordinates;

    std::size_t total_dimension() const; // dim over F2 of (H / U·H)
};

// Homology of the complex as a graded module, with the marked classes
// expressed in the resulting basis.
HomologyModule homology(const UComplex& c);

// Class of an explicit cycle (a formal sum of generators).  Throws a
// computation error when the sum is not a cycle.
HClass class_of(const UComplex& c, const std::vector<std::size_t>& cycle);

// Annihilator query: annihilator_power is the least d with U^d·class = 0,
// absent when the class has infinite order (a nonzero tower component).
// The zero class reports d = 0.
struct TorsionInfo {
    std::optional<unsigned> annihilator_power;
    bool is_torsion() const { return annihilator_power.has_value(); }
};
TorsionInfo is_u_torsion(const HomologyModule& h, const HClass& cls);

// The U = 1 specialization of an F2[U]-mode complex: same generators, every
// arrow flattened to weight zero.  Alexander and Maslov gradings are not
// gradings of the quotient and are dropped (all A set to 0, M cleared);
// marked cycles carry over through the generator bijection, realizing the
// induced map on classes.
UComplex set_u_one(const UComplex& c);

// Tensor product over the common coefficient ring.  Factors must be singly
// graded and in the same mode; the result is bigraded by (A1(x), A2(y)),
// with d(x⊗y) = dx⊗y + x⊗dy and marked cycles given by products of marked
// cycles.
UComplex tensor(const UComplex& a, const UComplex& b);

// Quotient by the subcomplex spanned by the given generators; errors when
// the span is not closed under the differential.
UComplex quotient_by_subcomplex(const UComplex& c,
                                const std::vector<std::size_t>& sub);

} // namespace kf

#endif // KF_UCOMPLEX_HPP

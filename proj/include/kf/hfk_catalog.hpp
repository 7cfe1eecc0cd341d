#ifndef KF_HFK_CATALOG_HPP
#define KF_HFK_CATALOG_HPP

// Closed-form bigraded knot Floer homology tables for (2,m) torus knots,
// Künneth tables for their connected sums, and the comparison of refined
// bigraded invariants.

#include "kf/rational.hpp"
#include "kf/ucomplex.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <vector>

namespace kf {

struct TableKey {
    AGrading alexander;
    Int maslov;

    bool operator<(const TableKey& other) const;
    bool operator==(const TableKey& other) const = default;
};

// Dimension table of a knot Floer homology group.  The hat variant lists
// the full bigraded dimensions; the minus variant lists the bidegrees of
// the module generators and records the decomposition into a free tower
// and U-torsion summands.
struct HFKTable {
    enum class Variant { hat, minus };

    struct Tower {
        Int alexander;
        Int maslov;
    };
    struct TorsionGen {
        Int alexander;
        Int maslov;
        // U-torsion order of the summand.  The closed forms pin the
        // bidegrees but not the orders; the default of 1 is consistent
        // with the hat/minus collapse identity and is stored as data
        // rather than asserted.
        unsigned order = 1;
    };

    Variant variant = Variant::hat;
    std::map<TableKey, unsigned> entries;
    std::optional<Tower> tower;     // minus variant only
    std::vector<TorsionGen> torsion; // minus variant only

    unsigned dim(const AGrading& a, const Int& m) const;
    // Dimension at an Alexander grading summed over Maslov gradings.
    std::size_t dim_at_alexander(const AGrading& a) const;
    std::size_t total_dimension() const;
    std::map<Int, std::size_t> dims_by_alexander_total() const;
    bool bigraded() const;

    nlohmann::json to_json() const;
};

// Hat-flavor table of the (2,m) torus knot: for m = -(2n+1) one dimension
// at (s, n+s) for |s| <= n; for m = 2n-1 one dimension at (s, s-n+1) for
// |s| <= n-1.  m must be odd with |m| >= 3.
HFKTable hat_table_T2(int m);

// Hat-flavor table of the unknot: a single dimension at (0, 0).
HFKTable hat_table_unknot();

// Minus-flavor table of the (2,m) torus knot: the free tower top sits at
// (n, 2n) for m = -(2n+1) and at (-(n-1), -2(n-1)) for m = 2n-1; torsion
// generators at (n-1-2i, 2n-1-2i), i < n, resp. (n-1-2i, -2i), i < n-1.
HFKTable minus_table_T2(int m);

// Bigraded Künneth table of a connected sum: dim(s1, s2, m) is the
// convolution over Maslov gradings of two singly-graded hat tables.
HFKTable kunneth_table(const HFKTable& t1, const HFKTable& t2);

// A nonzero homogeneous class in a bigraded group, known by its position.
struct RefinedInvariant {
    Int s1;
    Int s2;
    std::optional<Int> maslov;
    bool nonzero = true;
};

enum class RefinedComparison { equal, distinct, inconclusive };

// Compare two refined invariants: distinct positions certify distinct
// classes; equal positions certify equality only when the ambient table
// shows a one-dimensional slot there, which is why the (optional) table
// context is accepted.  Without context, or in a larger slot, the
// comparison is inconclusive.  Both invariants must be nonzero.
RefinedComparison refined_compare(const RefinedInvariant& a,
                                  const RefinedInvariant& b,
                                  const HFKTable* context = nullptr);

// Whether a class at bidegree (A, M) has 2A - M equal to the
// three-dimensional homotopy invariant 2l + 2 of the contact structure
// carrying the (k, l) knot of the two-parameter family.
bool d3_grading_check(int k, int l, const Int& alexander, const Int& maslov);

} // namespace kf

#endif // KF_HFK_CATALOG_HPP

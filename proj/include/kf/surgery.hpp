#ifndef KF_SURGERY_HPP
#define KF_SURGERY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kf/matrix.hpp"
#include "kf/rational.hpp"

namespace kf {

// One surgery component: a Legendrian unknot with classical invariants
// (tb0, rot0) carrying a contact (+1)- or (-1)-surgery coefficient.
// Its smooth surgery framing is a_i = tb0 + sign.
struct SurgeryComponent {
    Int tb0;
    Int rot0;
    int sign = -1;  // +1 or -1

    Int framing() const { return tb0 + sign; }
    bool operator==(const SurgeryComponent&) const = default;
};

// The knot whose invariants are computed after surgery.  It carries no
// surgery coefficient; `linkings[i]` is its linking number with component i.
struct DistinguishedKnot {
    Int tb0;
    Int rot0;
    std::vector<Int> linkings;

    bool operator==(const DistinguishedKnot&) const = default;
};

// A contact (+-1)-surgery presentation: a link of Legendrian unknots with
// surgery signs, pairwise linking numbers, and optionally a distinguished
// knot in the link complement.
struct SurgeryPresentation {
    std::vector<SurgeryComponent> components;
    // Symmetric integer matrix of pairwise linking numbers with zero
    // diagonal; the diagonal of the framed matrix comes from framings.
    std::vector<std::vector<Int>> linking;
    std::optional<DistinguishedKnot> knot;

    std::size_t size() const { return components.size(); }

    // Throws Error::bad_input on shape or symmetry violations.
    void validate() const;

    static SurgeryPresentation from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    bool operator==(const SurgeryPresentation&) const = default;
};

// Classical invariants of the distinguished knot and its ambient contact
// structure.  d3 is absent when the presentation was not a rational
// homology sphere computation (not used by the fixtures, where all four
// values are defined and integral).
struct ClassicalInvariants {
    Rat tb;
    Rat rot;
    Rat sl;
    std::optional<Rat> d3;
};

// The framed linking matrix M(a_1,...,a_n): linking numbers off the
// diagonal, framings a_i = tb0_i + sign_i on the diagonal.  When
// include_distinguished is set, row/column 0 holds the distinguished
// knot's linking vector with diagonal entry a0 (default 0), giving
// M(a0, a_1, ..., a_n).
RatMatrix framed_linking_matrix(const SurgeryPresentation& p,
                                bool include_distinguished = false,
                                const std::optional<Rat>& a0 = std::nullopt);

// tb of the distinguished knot after surgery:
//   tb = tb0 + det(M(0, a_1..a_n)) / det(M(a_1..a_n)).
// Requires the framed matrix to be nonsingular and the knot to be
// null-homologous in the surgered manifold (M^-1 * linkings integral).
Rat tb_after_surgery(const SurgeryPresentation& p);

// rot of the distinguished knot after surgery:
//   rot = r0 - <R, M^-1 Lambda>,
// with R the vector of component rotation numbers and Lambda the
// distinguished knot's linking vector.  Same preconditions as tb.
Rat rot_after_surgery(const SurgeryPresentation& p);

// d3 of the contact structure presented by the surgery link:
//   d3 = (c^2 - 3 sigma(M) - 2 n)/4 + q,
// where c^2 = R^T M^-1 R, n is the number of components and q the number
// of (+1)-components.  Requires M nonsingular.
Rat d3_invariant(const SurgeryPresentation& p);

// All four invariants of a presentation with a distinguished knot.
ClassicalInvariants classical_invariants(const SurgeryPresentation& p);

// Connected-sum arithmetic: tb adds plus one, rot adds, sl follows as
// tb - rot, and the ambient d3 adds when both are present.
ClassicalInvariants connected_sum(const ClassicalInvariants& a,
                                  const ClassicalInvariants& b);

// Self-linking number of the positive transverse push-off.
Rat self_linking(const Rat& tb, const Rat& rot);

}  // namespace kf

#endif  // KF_SURGERY_HPP

#ifndef KF_FIXTURES_HPP
#define KF_FIXTURES_HPP

#include "kf/surgery.hpp"

namespace kf::fixtures {

// Contact (+-1)-surgery presentation of the overtwisted structure carrying
// the non-loose negative torus knot family indexed by n >= 0:
// three fixed components plus n parallel push-off copies, distinguished
// knot included.  Frozen values: |det M| = 1, sigma(M) = -n-1,
// d3 = 1-2n, tb = n-2, rot = 3n-3, sl = 1-2n.
SurgeryPresentation surgery_ln(int n);

// Contact (+-1)-surgery presentation of the two-parameter non-loose
// negative torus knot family indexed by k, l >= 0: three fixed components
// plus l and k parallel copies of two further unknots, distinguished knot
// included.  Frozen values: |det M| = 1, tb = -4(k+l)-6,
// rot = -6l-2k-7, d3 = 2l+2.
SurgeryPresentation surgery_lkl(int k, int l);

}  // namespace kf::fixtures

#endif  // KF_FIXTURES_HPP

#pragma once

#include <utility>

#include "alm/binary_image.hpp"
#include "alm/mask.hpp"

namespace alm {

// Hit-or-miss transform. The output is 1 at positions where the mask,
// anchored there, lies fully inside the frame, every foreground cell overlays
// a 1 and every background cell overlays a 0. Positions where the mask does
// not fully fit are 0, so border cells are never hit; this convention keeps
// the thinning/thickening duality exact on a finite grid.
BinaryImage hit_or_miss(const BinaryImage& img, const TriValuedMask& mask);

// img minus its hit-or-miss hits.
BinaryImage thin_once(const BinaryImage& img, const TriValuedMask& mask);

// img union its hit-or-miss hits.
BinaryImage thicken_once(const BinaryImage& img, const TriValuedMask& mask);

// One sequential sweep through the octet.
BinaryImage thin_pass(const BinaryImage& img, const MaskOctet& octet);
BinaryImage thicken_pass(const BinaryImage& img, const MaskOctet& octet);

struct ConvergenceResult {
    BinaryImage image;
    int passes = 0;       // passes actually executed
    bool converged = false;
};

// Each thinning pass removes at least one cell or has converged, so the
// frame size bounds the pass count.
inline int default_pass_cap(const BinaryImage& img) { return img.width() + img.height(); }

// Repeats thin_pass/thicken_pass until a full pass changes nothing, or
// max_passes is reached. converged is left false in the latter case; the
// caller decides how severe that is.
ConvergenceResult thin_to_convergence(const BinaryImage& img, const MaskOctet& octet,
                                      int max_passes);
ConvergenceResult thicken_to_convergence(const BinaryImage& img, const MaskOctet& octet,
                                         int max_passes);

// De Morgan duality of thinning and thickening:
//   first  = [ complement(thin(complement(A), complement(B))) == thicken(A, B) ]
//   second = [ complement(thicken(complement(A), complement(B))) == thin(A, B) ]
std::pair<bool, bool> check_duality(const BinaryImage& img, const TriValuedMask& mask);

}  // namespace alm

#pragma once

#include "hvhom/algebra.hpp"
#include "hvhom/endo.hpp"
#include "hvhom/grid.hpp"
#include "hvhom/report.hpp"

namespace hvhom {

/// Yau-twisted bracket [x, y]_phi = phi([x, y]).
AlgElement hom_bracket(const Endomorphism& phi, const AlgElement& x, const AlgElement& y);

/// [phi x, [y,z]_phi]_phi + cyclic == 0 on all generator triples of the window.
CheckReport check_hom_jacobi(const Endomorphism& phi, Index window, const GridOptions& options = {});

/// phi([x,y]_phi) == [phi x, phi y]_phi on all generator pairs of the window.
CheckReport check_multiplicative(const Endomorphism& phi, Index window,
                                 const GridOptions& options = {});

/// phi^{-1}(y). Only available when the index map n -> kn is a bijection
/// (k = +-1) and phi is invertible degree by degree; otherwise throws
/// InducedAlgebraUnavailable.
AlgElement invert_endo(const Endomorphism& phi, const AlgElement& y);

/// Induced Lie bracket phi^{-1}([x, y]_phi).
AlgElement induced_bracket(const Endomorphism& phi, const AlgElement& x, const AlgElement& y);

}  // namespace hvhom

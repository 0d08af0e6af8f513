#pragma once

// Umbrella header: the full exact-arithmetic unitarity toolkit.
//
//   scalar.hpp    exact rationals, parsing, doubled-integer fast path
//   error.hpp     typed error codes carried by every thrown Error
//   family.hpp    the five Hermitian families and their parameters
//   weight.hpp    highest-weight coordinates: validation, parsing, printing
//   weyl.hpp      rho shifts, dominant representatives, compact Weyl orbits
//   schmid.hpp    Schmid-module coordinates, levels, enumeration
//   dirac.hpp     the exact Dirac-inequality margin
//   criteria.hpp  closed-form thresholds and the full-condition guarantees
//   classify.hpp  the classifier, cross-checker, and lemma verifiers
//   verify.hpp    seeded verification suites over deterministic grids

#include "diracgate/classify.hpp"
#include "diracgate/criteria.hpp"
#include "diracgate/dirac.hpp"
#include "diracgate/error.hpp"
#include "diracgate/family.hpp"
#include "diracgate/scalar.hpp"
#include "diracgate/schmid.hpp"
#include "diracgate/verify.hpp"
#include "diracgate/weight.hpp"
#include "diracgate/weyl.hpp"

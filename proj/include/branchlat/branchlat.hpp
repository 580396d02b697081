#pragma once

// Umbrella header: exact combinatorics of column lattices, interlacing
// patterns, stable-range branching multiplicities for the classical groups,
// and straightening of products of column minors by exact interpolation.

#include "branching.hpp"    // IWYU pragma: export
#include "classical.hpp"    // IWYU pragma: export
#include "diagrams.hpp"     // IWYU pragma: export
#include "errors.hpp"       // IWYU pragma: export
#include "exact.hpp"        // IWYU pragma: export
#include "gtpattern.hpp"    // IWYU pragma: export
#include "json_io.hpp"      // IWYU pragma: export
#include "lattice.hpp"      // IWYU pragma: export
#include "prng.hpp"         // IWYU pragma: export
#include "straightening.hpp"  // IWYU pragma: export
#include "tableaux.hpp"     // IWYU pragma: export

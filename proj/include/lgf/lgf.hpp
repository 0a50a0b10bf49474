#pragma once

// Lattice Green's functions and resolvents: residue-derived hypergeometric
// series for five lattice families, a torus-quadrature oracle, and the
// cross-validation harness that reconciles them.

#include "lgf/branch_series.hpp"
#include "lgf/chain1d.hpp"
#include "lgf/elliptic.hpp"
#include "lgf/extensions.hpp"
#include "lgf/fitting.hpp"
#include "lgf/gamma.hpp"
#include "lgf/lattice.hpp"
#include "lgf/pfq.hpp"
#include "lgf/quadrature.hpp"
#include "lgf/series.hpp"
#include "lgf/square2d.hpp"
#include "lgf/trihex2d.hpp"
#include "lgf/validation.hpp"

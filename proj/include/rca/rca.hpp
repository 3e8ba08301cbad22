#pragma once

#include "rca/errors.hpp"
#include "rca/rational.hpp"
#include "rca/numtheory.hpp"
#include "rca/monomial.hpp"
#include "rca/polynomial.hpp"
#include "rca/groebner.hpp"
#include "rca/lattice.hpp"
#include "rca/invariant_ring.hpp"
#include "rca/specials.hpp"
#include "rca/quiver.hpp"
#include "rca/deformation.hpp"
#include "rca/fixtures.hpp"
#include "rca/verify.hpp"

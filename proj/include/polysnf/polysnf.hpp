#pragma once

// Everything except the CLI front end, which needs the vendored JSON and CLI11 headers.

#include "polysnf/error.hpp"

#include "polysnf/algebra/factor.hpp"
#include "polysnf/algebra/field.hpp"
#include "polysnf/algebra/gcd.hpp"
#include "polysnf/algebra/parse.hpp"
#include "polysnf/algebra/polynomial.hpp"
#include "polysnf/algebra/ring.hpp"

#include "polysnf/groebner/groebner.hpp"

#include "polysnf/polymatrix/elimination.hpp"
#include "polysnf/polymatrix/minors.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"
#include "polysnf/polymatrix/quotient.hpp"

#include "polysnf/smith/automorphic.hpp"
#include "polysnf/smith/decide.hpp"
#include "polysnf/smith/prime_profile.hpp"
#include "polysnf/smith/recognize.hpp"
#include "polysnf/smith/smith.hpp"

#include "polysnf/automorphism/tame.hpp"

#include "polysnf/harness/generators.hpp"
#include "polysnf/harness/pcg.hpp"
#include "polysnf/harness/suite.hpp"

#pragma once

#include "bezout/integer_ring.hpp"
#include "bezout/polynomial.hpp"
#include "bezout/rational_ring.hpp"

/// Applies X to every ring the library is instantiated for.
#define BEZOUT_FOR_EACH_RING(X) \
    X(::bezout::IntegerRing)    \
    X(::bezout::RationalRing)   \
    X(::bezout::PolyRing)

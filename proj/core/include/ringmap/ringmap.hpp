#pragma once

// Umbrella header.

#include "ringmap/curve.hpp"
#include "ringmap/defaults.hpp"
#include "ringmap/error.hpp"
#include "ringmap/fourier.hpp"
#include "ringmap/harmonic_map.hpp"
#include "ringmap/hopf.hpp"
#include "ringmap/lift.hpp"
#include "ringmap/minimize.hpp"
#include "ringmap/modulus.hpp"
#include "ringmap/reference.hpp"
#include "ringmap/regularity.hpp"
#include "ringmap/serialize.hpp"
#include "ringmap/version.hpp"

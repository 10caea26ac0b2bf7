#pragma once

// Umbrella header.

#include "shalika/engine.hpp"
#include "shalika/gauss_rational.hpp"
#include "shalika/langlands.hpp"
#include "shalika/orbits.hpp"
#include "shalika/parabolic.hpp"
#include "shalika/permutation.hpp"
#include "shalika/rational.hpp"
#include "shalika/rational_linalg.hpp"
#include "shalika/torus_char.hpp"
#include "shalika/verify.hpp"

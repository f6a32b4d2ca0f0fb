#pragma once

// Umbrella header.

#include "plurigen/basket.hpp"
#include "plurigen/errors.hpp"
#include "plurigen/hypersurface.hpp"
#include "plurigen/inference.hpp"
#include "plurigen/json_io.hpp"
#include "plurigen/rational.hpp"
#include "plurigen/riemann_roch.hpp"
#include "plurigen/table.hpp"
#include "plurigen/thresholds.hpp"
#include "plurigen/verifier.hpp"

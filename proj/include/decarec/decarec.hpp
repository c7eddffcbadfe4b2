#pragma once

// Convenience umbrella header.

#include "decarec/analysis.hpp"
#include "decarec/closed_form.hpp"
#include "decarec/coefficients.hpp"
#include "decarec/errors.hpp"
#include "decarec/indexing.hpp"
#include "decarec/initial_conditions.hpp"
#include "decarec/orbit.hpp"
#include "decarec/presets.hpp"
#include "decarec/rational.hpp"
#include "decarec/symmetry.hpp"

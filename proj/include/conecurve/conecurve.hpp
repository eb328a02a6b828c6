#pragma once

/// Umbrella header.

#include "conecurve/lorentz.hpp"
#include "conecurve/jet.hpp"
#include "conecurve/fd.hpp"
#include "conecurve/curve.hpp"
#include "conecurve/csv.hpp"
#include "conecurve/frame.hpp"
#include "conecurve/smarandache.hpp"
#include "conecurve/arclength.hpp"
#include "conecurve/registry.hpp"
#include "conecurve/assessment.hpp"
#include "conecurve/figure.hpp"

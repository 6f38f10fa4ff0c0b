#pragma once

// Umbrella header for the Kapteyn series library.

#include "kapteyn/bessel.hpp"
#include "kapteyn/closed_forms.hpp"
#include "kapteyn/combinatorics.hpp"
#include "kapteyn/errors.hpp"
#include "kapteyn/polynomial.hpp"
#include "kapteyn/rational.hpp"
#include "kapteyn/series.hpp"
#include "kapteyn/series_eval.hpp"
#include "kapteyn/transform_first.hpp"
#include "kapteyn/transform_second.hpp"

#pragma once

#include "gap/appell.hpp"
#include "gap/errors.hpp"
#include "gap/gauss_appell.hpp"
#include "gap/hypergeom.hpp"
#include "gap/polynomial.hpp"
#include "gap/power_series.hpp"
#include "gap/rational.hpp"
#include "gap/umbral.hpp"

#pragma once

#include "dirac_lt/numeric.hpp"
#include "dirac_lt/spectrum.hpp"
#include "dirac_lt/constants.hpp"
#include "dirac_lt/quadrature.hpp"
#include "dirac_lt/minimize.hpp"
#include "dirac_lt/infimum.hpp"
#include "dirac_lt/families.hpp"
#include "dirac_lt/report.hpp"
#include "dirac_lt/tables.hpp"

#pragma once

// Umbrella header.

#include "nball/complex_branch.hpp"
#include "nball/dist_expr.hpp"
#include "nball/errors.hpp"
#include "nball/exact_value.hpp"
#include "nball/ft_oracle.hpp"
#include "nball/numeric_verify.hpp"
#include "nball/quadrature.hpp"
#include "nball/rational.hpp"
#include "nball/scalar.hpp"
#include "nball/special_functions.hpp"
#include "nball/volume.hpp"

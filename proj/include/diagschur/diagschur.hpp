#pragma once

#include "diagschur/combinatorics.hpp"
#include "diagschur/continued_fraction.hpp"
#include "diagschur/convergence.hpp"
#include "diagschur/errors.hpp"
#include "diagschur/hankel.hpp"
#include "diagschur/laurent_series.hpp"
#include "diagschur/measure.hpp"
#include "diagschur/multidiag.hpp"
#include "diagschur/multipoly.hpp"
#include "diagschur/polynomial.hpp"
#include "diagschur/rational.hpp"
#include "diagschur/schur.hpp"
#include "diagschur/toeplitz.hpp"

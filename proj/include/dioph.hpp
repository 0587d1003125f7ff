#pragma once

#include "dioph/atlas/catalog.hpp"
#include "dioph/atlas/number_spec.hpp"
#include "dioph/error.hpp"
#include "dioph/estimator/duality.hpp"
#include "dioph/estimator/fit.hpp"
#include "dioph/estimator/integer_poly.hpp"
#include "dioph/estimator/lattice.hpp"
#include "dioph/estimator/minima.hpp"
#include "dioph/estimator/witness.hpp"
#include "dioph/exponents/classify.hpp"
#include "dioph/exponents/key.hpp"
#include "dioph/exponents/profile.hpp"
#include "dioph/exponents/rules.hpp"
#include "dioph/exponents/theta.hpp"
#include "dioph/io/json_io.hpp"
#include "dioph/numerics/cubic.hpp"
#include "dioph/numerics/exact_matrix.hpp"
#include "dioph/numerics/interval.hpp"
#include "dioph/numerics/rational.hpp"

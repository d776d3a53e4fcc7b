#pragma once

#include "eigenlogic/bayes.hpp"
#include "eigenlogic/born.hpp"
#include "eigenlogic/errors.hpp"
#include "eigenlogic/formula.hpp"
#include "eigenlogic/io.hpp"
#include "eigenlogic/polynomial.hpp"
#include "eigenlogic/projector.hpp"
#include "eigenlogic/state.hpp"
#include "eigenlogic/tolerances.hpp"

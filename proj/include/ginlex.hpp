#pragma once

#include "ginlex/error.hpp"
#include "ginlex/field.hpp"
#include "ginlex/monomial.hpp"
#include "ginlex/polynomial.hpp"
#include "ginlex/parse.hpp"
#include "ginlex/linear_change.hpp"
#include "ginlex/groebner.hpp"
#include "ginlex/quotient.hpp"
#include "ginlex/oracle.hpp"
#include "ginlex/monomial_ideal.hpp"
#include "ginlex/gin.hpp"
#include "ginlex/partial_elim.hpp"
#include "ginlex/curve.hpp"
#include "ginlex/ideal_file.hpp"

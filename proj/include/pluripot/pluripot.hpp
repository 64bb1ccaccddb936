#pragma once

#include "checks.hpp"
#include "cone.hpp"
#include "extremal.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "logsupport.hpp"
#include "lp.hpp"
#include "massint.hpp"
#include "parallel.hpp"
#include "polyspace.hpp"
#include "polytope.hpp"
#include "pullback.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "surrogates.hpp"

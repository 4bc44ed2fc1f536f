#pragma once

#include "errors.hpp"
#include "matrix.hpp"
#include "octonion.hpp"
#include "lie.hpp"
#include "expm.hpp"
#include "eigen.hpp"
#include "subspace.hpp"
#include "triality.hpp"
#include "orbit.hpp"
#include "classification.hpp"
#include "algebra_checks.hpp"
#include "report.hpp"

#pragma once

#include "lanczos/coefficients.hpp"
#include "lanczos/errors.hpp"
#include "lanczos/evaluator.hpp"
#include "lanczos/geometry.hpp"
#include "lanczos/harness.hpp"
#include "lanczos/quadrature.hpp"
#include "lanczos/reference.hpp"
#include "lanczos/roots.hpp"
#include "lanczos/transform.hpp"

#pragma once

#include "skewla/algebra.hpp"
#include "skewla/eigenpairs.hpp"
#include "skewla/elimination.hpp"
#include "skewla/errors.hpp"
#include "skewla/json_io.hpp"
#include "skewla/matrix.hpp"
#include "skewla/ode.hpp"
#include "skewla/quasidet.hpp"
#include "skewla/quaternion.hpp"
#include "skewla/rational.hpp"
#include "skewla/scalar_traits.hpp"

#pragma once

#include "screwsr/compact_groups.hpp"
#include "screwsr/controllability.hpp"
#include "screwsr/dual_space.hpp"
#include "screwsr/errors.hpp"
#include "screwsr/geodesics.hpp"
#include "screwsr/io.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/octonion.hpp"
#include "screwsr/random.hpp"
#include "screwsr/scalar.hpp"
#include "screwsr/screw_core.hpp"
#include "screwsr/space_form.hpp"
#include "screwsr/tolerances.hpp"
#include "screwsr/verify.hpp"

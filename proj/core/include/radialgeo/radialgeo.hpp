#pragma once

#include "radialgeo/conformal.hpp"
#include "radialgeo/errors.hpp"
#include "radialgeo/geodesic.hpp"
#include "radialgeo/jet2.hpp"
#include "radialgeo/metric.hpp"
#include "radialgeo/profile.hpp"
#include "radialgeo/radialmodel.hpp"
#include "radialgeo/rotation.hpp"
#include "radialgeo/surface.hpp"

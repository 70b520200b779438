#pragma once

#include "accdet/core_params.hpp"
#include "accdet/detector_mode.hpp"
#include "accdet/kg_inner.hpp"
#include "accdet/numerics.hpp"
#include "accdet/rindler_field.hpp"
#include "accdet/single_detector.hpp"
#include "accdet/two_detector.hpp"
#include "accdet/udw_dynamics.hpp"

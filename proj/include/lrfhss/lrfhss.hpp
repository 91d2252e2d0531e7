#pragma once

// Umbrella header: airtime models, frame planning, and the transmission
// current/energy model with externalized device calibration.

#include "lrfhss/calibration.hpp"
#include "lrfhss/calibration_io.hpp"
#include "lrfhss/constants.hpp"
#include "lrfhss/datarate.hpp"
#include "lrfhss/energy.hpp"
#include "lrfhss/errors.hpp"
#include "lrfhss/format.hpp"
#include "lrfhss/framing.hpp"
#include "lrfhss/interpolate.hpp"
#include "lrfhss/serialization.hpp"
#include "lrfhss/toa.hpp"

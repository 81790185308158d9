#pragma once

#include "error.hpp"
#include "format.hpp"
#include "homeo.hpp"
#include "jamesian.hpp"
#include "loop_core.hpp"
#include "rational.hpp"
#include "regions.hpp"
#include "salzmann.hpp"
#include "sampling.hpp"

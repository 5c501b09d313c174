#pragma once

#include "alcuin/core_math.hpp"
#include "alcuin/counting.hpp"
#include "alcuin/geometry.hpp"
#include "alcuin/series.hpp"

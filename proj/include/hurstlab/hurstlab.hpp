#pragma once

// Umbrella header: time-varying long-range dependence analysis of financial
// series via rescaled-range and detrended-fluctuation Hurst estimators.

#include "hurstlab/csv.hpp"
#include "hurstlab/date.hpp"
#include "hurstlab/error.hpp"
#include "hurstlab/estimators.hpp"
#include "hurstlab/pipeline.hpp"
#include "hurstlab/report.hpp"
#include "hurstlab/rolling.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/stats.hpp"
#include "hurstlab/synth.hpp"

#ifndef CSCORE_CSCORE_HPP
#define CSCORE_CSCORE_HPP

// Core library: metrics, threshold selection, contour geometry, one-vs-rest
// extension and the synthetic generator. The I/O and report headers are
// separate because they pull in OpenSSL, fmt and nlohmann/json.

#include "cscore/errors.hpp"
#include "cscore/isocost_geometry.hpp"
#include "cscore/metrics_core.hpp"
#include "cscore/multiclass.hpp"
#include "cscore/synth_data.hpp"
#include "cscore/threshold_sweep.hpp"
#include "cscore/version.hpp"

#endif  // CSCORE_CSCORE_HPP

#pragma once

// Umbrella header for the hydrogen cost and carbon-intensity engine.

#include "h2cost/analysis.hpp"
#include "h2cost/dataset.hpp"
#include "h2cost/electrolysis.hpp"
#include "h2cost/error.hpp"
#include "h2cost/finance.hpp"
#include "h2cost/ingest.hpp"
#include "h2cost/model.hpp"
#include "h2cost/report.hpp"
#include "h2cost/scenario.hpp"
#include "h2cost/smr.hpp"
#include "h2cost/version.hpp"

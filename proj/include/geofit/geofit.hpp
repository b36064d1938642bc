#pragma once

#include "cloud.hpp"
#include "correlate.hpp"
#include "dataio.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "regress.hpp"
#include "report.hpp"
#include "svg.hpp"
#include "vecspace.hpp"

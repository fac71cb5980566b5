#pragma once

#include "bias.hpp"
#include "bivariate.hpp"
#include "coeff.hpp"
#include "dual_series.hpp"
#include "genfun.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "reference_values.hpp"
#include "report_io.hpp"

#pragma once

// Umbrella header: exact sets of full measure avoiding arithmetic
// progressions, escape certificates, and the supporting exact arithmetic.

#include "certified_real.hpp"
#include "config.hpp"
#include "construction.hpp"
#include "errors.hpp"
#include "escape.hpp"
#include "finite_complement.hpp"
#include "interval_set.hpp"
#include "json_io.hpp"
#include "parse.hpp"
#include "rational.hpp"
#include "set_spec.hpp"

#ifndef SLCE_SLCE_HPP
#define SLCE_SLCE_HPP

// Umbrella header.

#include "slce/ads.hpp"
#include "slce/corr.hpp"
#include "slce/cyclo.hpp"
#include "slce/errors.hpp"
#include "slce/gf.hpp"
#include "slce/json_io.hpp"
#include "slce/mult.hpp"
#include "slce/ntutil.hpp"
#include "slce/seq.hpp"
#include "slce/verify.hpp"

#endif  // SLCE_SLCE_HPP

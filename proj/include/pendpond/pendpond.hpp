#ifndef PENDPOND_PENDPOND_HPP
#define PENDPOND_PENDPOND_HPP

// Everything except cache.hpp, which also needs OpenSSL.

#include "cusps.hpp"
#include "errors.hpp"
#include "eta_quotient.hpp"
#include "haupt.hpp"
#include "modops.hpp"
#include "numeta.hpp"
#include "partitions.hpp"
#include "rings.hpp"
#include "series.hpp"
#include "series_json.hpp"
#include "verify.hpp"

#endif

#pragma once

#include "mwrc/client_graph.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/json_io.hpp"
#include "mwrc/optimal.hpp"
#include "mwrc/ordering.hpp"
#include "mwrc/prufer.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/rng.hpp"
#include "mwrc/sim.hpp"
#include "mwrc/snr_profile.hpp"
#include "mwrc/verify.hpp"

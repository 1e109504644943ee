#pragma once

/// Umbrella header for the revpla library.

#include "revpla/bits.hpp"
#include "revpla/config.hpp"
#include "revpla/errors.hpp"
#include "revpla/gates.hpp"
#include "revpla/netlist.hpp"
#include "revpla/plaspec.hpp"
#include "revpla/power.hpp"
#include "revpla/report.hpp"
#include "revpla/sim.hpp"
#include "revpla/synth.hpp"

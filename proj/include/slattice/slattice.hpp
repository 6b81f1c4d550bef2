#pragma once

#include "slattice/core.hpp"
#include "slattice/weak_order.hpp"
#include "slattice/tamari.hpp"
#include "slattice/lattice_props.hpp"
#include "slattice/nu_tamari.hpp"
#include "slattice/io.hpp"

#pragma once

#include "leodoppler/analytic_distributions.hpp"
#include "leodoppler/cluster_process.hpp"
#include "leodoppler/csv.hpp"
#include "leodoppler/doppler_model.hpp"
#include "leodoppler/errors.hpp"
#include "leodoppler/monte_carlo.hpp"
#include "leodoppler/orbital_geometry.hpp"
#include "leodoppler/random.hpp"

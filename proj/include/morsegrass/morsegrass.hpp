#pragma once

#include "morsegrass/betti.hpp"
#include "morsegrass/bigint.hpp"
#include "morsegrass/cohomology.hpp"
#include "morsegrass/errors.hpp"
#include "morsegrass/field_theory.hpp"
#include "morsegrass/flow.hpp"
#include "morsegrass/json_io.hpp"
#include "morsegrass/moment_polytope.hpp"
#include "morsegrass/polynomial.hpp"
#include "morsegrass/schubert.hpp"
#include "morsegrass/smith.hpp"
#include "morsegrass/witten.hpp"

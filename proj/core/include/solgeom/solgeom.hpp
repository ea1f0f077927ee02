#pragma once

#include "solgeom/builders.hpp"
#include "solgeom/errors.hpp"
#include "solgeom/fields.hpp"
#include "solgeom/grid.hpp"
#include "solgeom/identities.hpp"
#include "solgeom/jet.hpp"
#include "solgeom/omission.hpp"
#include "solgeom/operators.hpp"
#include "solgeom/profile.hpp"
#include "solgeom/spiral.hpp"
#include "solgeom/surface.hpp"
#include "solgeom/surface_spec.hpp"
#include "solgeom/version.hpp"

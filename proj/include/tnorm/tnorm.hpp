#pragma once

#include "tnorm/charpoly.hpp"
#include "tnorm/dim_group.hpp"
#include "tnorm/error.hpp"
#include "tnorm/finite_field.hpp"
#include "tnorm/integer.hpp"
#include "tnorm/irreducibility.hpp"
#include "tnorm/matrix.hpp"
#include "tnorm/number_field.hpp"
#include "tnorm/perron.hpp"
#include "tnorm/polynomial.hpp"
#include "tnorm/roots.hpp"
#include "tnorm/surface_bundle.hpp"
#include "tnorm/thurston_norm.hpp"

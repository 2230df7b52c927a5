#pragma once

#include "complex.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "lerch.hpp"
#include "qmc.hpp"
#include "quad1d.hpp"
#include "simplex.hpp"
#include "special.hpp"

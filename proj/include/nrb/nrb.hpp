#pragma once

#include "nrb/bounds.hpp"
#include "nrb/errors.hpp"
#include "nrb/golden.hpp"
#include "nrb/linalg.hpp"
#include "nrb/numrange.hpp"
#include "nrb/polyzero.hpp"

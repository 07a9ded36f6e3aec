#pragma once

#include "drft/arith.hpp"
#include "drft/errors.hpp"
#include "drft/even.hpp"
#include "drft/periodic.hpp"
#include "drft/ramanujan.hpp"
#include "drft/rational.hpp"
#include "drft/scalar.hpp"
#include "drft/verify.hpp"

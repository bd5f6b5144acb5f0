#pragma once

#include "core.hpp"
#include "chain.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"
#include "series_tools.hpp"
#include "speed_laws.hpp"
#include "register.hpp"
#include "multi.hpp"
#include "oracle.hpp"

#pragma once

#include "elimkit/disc_hyper.hpp"
#include "elimkit/disc_points.hpp"
#include "elimkit/jacobian.hpp"
#include "elimkit/json_io.hpp"
#include "elimkit/mertens.hpp"
#include "elimkit/oracle.hpp"
#include "elimkit/resultant.hpp"

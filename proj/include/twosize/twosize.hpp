#pragma once

#include "twosize/arith.hpp"
#include "twosize/classes.hpp"
#include "twosize/identities.hpp"
#include "twosize/maps.hpp"
#include "twosize/partitions.hpp"
#include "twosize/report_io.hpp"

#pragma once

#include "ttperm/error.hpp"
#include "ttperm/io/serialization.hpp"
#include "ttperm/linalg/matrix_fp.hpp"
#include "ttperm/linalg/matrix_z.hpp"
#include "ttperm/motives/motives.hpp"
#include "ttperm/rep/functors.hpp"
#include "ttperm/rep/integral_complex.hpp"
#include "ttperm/rep/koszul.hpp"
#include "ttperm/rep/random.hpp"
#include "ttperm/support/support.hpp"
#include "ttperm/topology/generators.hpp"
#include "ttperm/topology/tower.hpp"
#include "ttperm/topology/wbar.hpp"

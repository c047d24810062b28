#pragma once

#include "adet/core.hpp"
#include "adet/error.hpp"
#include "adet/exact_cover.hpp"
#include "adet/homology.hpp"
#include "adet/ideal.hpp"
#include "adet/pairmod.hpp"
#include "adet/stanley.hpp"
#include "adet/harness.hpp"

#pragma once

#include "orbihom/chains.hpp"
#include "orbihom/complex.hpp"
#include "orbihom/error.hpp"
#include "orbihom/generators.hpp"
#include "orbihom/homology.hpp"
#include "orbihom/io.hpp"
#include "orbihom/matrix.hpp"
#include "orbihom/smith.hpp"
#include "orbihom/subdivision.hpp"
#include "orbihom/verify.hpp"

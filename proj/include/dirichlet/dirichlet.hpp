#pragma once

#include "dirichlet/catalog.hpp"
#include "dirichlet/chordal.hpp"
#include "dirichlet/chromatic.hpp"
#include "dirichlet/common.hpp"
#include "dirichlet/harmonic.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/master.hpp"
#include "dirichlet/network.hpp"
#include "dirichlet/orientations.hpp"
#include "dirichlet/polynomial.hpp"
#include "dirichlet/poset.hpp"

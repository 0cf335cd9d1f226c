#pragma once

// Umbrella header.

#include "leibniz/error.hpp"
#include "leibniz/exactfield.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/io.hpp"
#include "leibniz/subspaces.hpp"
#include "leibniz/structure.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/families.hpp"
#include "leibniz/orbit.hpp"
#include "leibniz/classify.hpp"
#include "leibniz/census.hpp"
#include "leibniz/cli.hpp"

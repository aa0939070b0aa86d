// Umbrella header.
#pragma once

#include "scalars.hpp"
#include "monomials.hpp"
#include "polynomials.hpp"
#include "tables.hpp"
#include "relation_engine.hpp"
#include "guessers.hpp"
#include "linalg_oracle.hpp"
#include "bench.hpp"

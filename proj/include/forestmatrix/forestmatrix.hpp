#pragma once

// Umbrella header: the whole public surface.

#include <forestmatrix/bigint.hpp>
#include <forestmatrix/closed_forms.hpp>
#include <forestmatrix/disjoint_set.hpp>
#include <forestmatrix/dissemination.hpp>
#include <forestmatrix/enumeration.hpp>
#include <forestmatrix/errors.hpp>
#include <forestmatrix/fib_lucas.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/matrix.hpp>
#include <forestmatrix/random_walk.hpp>
#include <forestmatrix/rng.hpp>
#include <forestmatrix/serialization.hpp>
#include <forestmatrix/verify.hpp>

#pragma once

// Umbrella header for the layout algebra library.

#include "layoutalg/error.hpp"
#include "layoutalg/flat_layout.hpp"
#include "layoutalg/layout.hpp"
#include "layoutalg/nest_morphism.hpp"
#include "layoutalg/nested_tuple.hpp"
#include "layoutalg/notation.hpp"
#include "layoutalg/oracle.hpp"
#include "layoutalg/tuple_morphism.hpp"

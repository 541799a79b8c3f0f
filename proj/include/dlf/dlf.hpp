#pragma once

#include "complex.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "export.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "line_field.hpp"
#include "off.hpp"
#include "radial.hpp"
#include "simplify.hpp"
#include "vector_field.hpp"

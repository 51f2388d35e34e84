#pragma once

#include "galois/catalog.hpp"
#include "galois/connection.hpp"
#include "galois/error.hpp"
#include "galois/generate.hpp"
#include "galois/lattice.hpp"
#include "galois/laws.hpp"
#include "galois/quantale.hpp"
#include "galois/report.hpp"
#include "galois/search.hpp"
#include "galois/suites.hpp"
#include "galois/text_format.hpp"
#include "galois/theorems.hpp"

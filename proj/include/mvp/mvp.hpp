#pragma once

#include "arcset.hpp"
#include "errors.hpp"
#include "inversion.hpp"
#include "motzkin.hpp"
#include "parking.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "sandpile.hpp"
#include "subgraph.hpp"
#include "tables.hpp"
#include "text.hpp"
#include "verify.hpp"

#pragma once

#include "grouplab/errors.hpp"
#include "grouplab/permutation.hpp"
#include "grouplab/element_set.hpp"
#include "grouplab/arith.hpp"
#include "grouplab/group.hpp"
#include "grouplab/quotient.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/embedding.hpp"
#include "grouplab/catalog.hpp"
#include "grouplab/harness.hpp"
#include "grouplab/report.hpp"

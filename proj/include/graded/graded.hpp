#pragma once

// Umbrella header.

#include "graded/bitset.hpp"
#include "graded/cli.hpp"
#include "graded/constructions.hpp"
#include "graded/core.hpp"
#include "graded/corpus.hpp"
#include "graded/errors.hpp"
#include "graded/families.hpp"
#include "graded/finite_group.hpp"
#include "graded/laws.hpp"
#include "graded/module.hpp"
#include "graded/phi.hpp"
#include "graded/predicates.hpp"
#include "graded/report.hpp"
#include "graded/ring.hpp"
#include "graded/specfile.hpp"

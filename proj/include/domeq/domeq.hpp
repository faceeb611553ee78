#pragma once

#include "domeq/cnf.hpp"
#include "domeq/constructions.hpp"
#include "domeq/domination.hpp"
#include "domeq/error.hpp"
#include "domeq/generators.hpp"
#include "domeq/graph.hpp"
#include "domeq/io.hpp"
#include "domeq/matching.hpp"
#include "domeq/recognition.hpp"
#include "domeq/rng.hpp"
#include "domeq/verify.hpp"

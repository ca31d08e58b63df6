#pragma once

#include "canonical.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "game.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "rng.hpp"
#include "verifier.hpp"

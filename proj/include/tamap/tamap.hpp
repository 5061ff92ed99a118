#pragma once

#include "tamap/bijections.hpp"
#include "tamap/dot.hpp"
#include "tamap/error.hpp"
#include "tamap/map_decomposition.hpp"
#include "tamap/maps.hpp"
#include "tamap/paths.hpp"
#include "tamap/series.hpp"
#include "tamap/tamari.hpp"
#include "tamap/trees.hpp"
#include "tamap/verify.hpp"

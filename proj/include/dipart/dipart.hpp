#pragma once

#include "dipart/alis.hpp"
#include "dipart/build.hpp"
#include "dipart/core.hpp"
#include "dipart/detect.hpp"
#include "dipart/digraph.hpp"
#include "dipart/enumerate.hpp"
#include "dipart/io.hpp"
#include "dipart/matching.hpp"
#include "dipart/partition.hpp"
#include "dipart/sweep.hpp"

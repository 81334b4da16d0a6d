#pragma once

#include "thetakit/graph.hpp"
#include "thetakit/flow.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/detectors.hpp"
#include "thetakit/separability.hpp"
#include "thetakit/treewidth.hpp"
#include "thetakit/tower.hpp"
#include "thetakit/extraction.hpp"
#include "thetakit/reference.hpp"
#include "thetakit/io.hpp"
#include "thetakit/suites.hpp"

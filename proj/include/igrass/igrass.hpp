#pragma once

#include "igrass/bigint.hpp"
#include "igrass/classify.hpp"
#include "igrass/cone.hpp"
#include "igrass/error.hpp"
#include "igrass/faces.hpp"
#include "igrass/geometry.hpp"
#include "igrass/grading.hpp"
#include "igrass/hilbert.hpp"
#include "igrass/io.hpp"
#include "igrass/linalg.hpp"
#include "igrass/plucker.hpp"
#include "igrass/smoothness.hpp"

#pragma once

#include "chordrig/certify.hpp"
#include "chordrig/chordal.hpp"
#include "chordrig/error.hpp"
#include "chordrig/exactmat.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/generate.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/io.hpp"
#include "chordrig/ktree.hpp"
#include "chordrig/matrix.hpp"
#include "chordrig/psdize.hpp"
#include "chordrig/rational.hpp"
#include "chordrig/stress.hpp"
#include "chordrig/svg.hpp"

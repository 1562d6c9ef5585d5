#pragma once

#include "kink/cct.hpp"
#include "kink/cli.hpp"
#include "kink/error.hpp"
#include "kink/goeritz.hpp"
#include "kink/io.hpp"
#include "kink/linalg.hpp"
#include "kink/matrix.hpp"
#include "kink/moves.hpp"
#include "kink/qform.hpp"
#include "kink/reducer.hpp"
#include "kink/report.hpp"

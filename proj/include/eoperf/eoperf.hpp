#pragma once

#include "eoperf/error.hpp"
#include "eoperf/mrtd_fit.hpp"
#include "eoperf/mrtd_io.hpp"
#include "eoperf/photometry.hpp"
#include "eoperf/scenario.hpp"
#include "eoperf/sdt.hpp"
#include "eoperf/svg.hpp"
#include "eoperf/sweep.hpp"
#include "eoperf/table.hpp"
#include "eoperf/thermal.hpp"

#pragma once

#include "otprh/cauchy.hpp"
#include "otprh/quadrature.hpp"
#include "otprh/report.hpp"
#include "otprh/rhchain.hpp"
#include "otprh/szego.hpp"
#include "otprh/trigpoly.hpp"
#include "otprh/types.hpp"
#include "otprh/verify.hpp"
#include "otprh/weights.hpp"

#pragma once

#include "hamcert/certify.hpp"
#include "hamcert/closure.hpp"
#include "hamcert/eigen.hpp"
#include "hamcert/errors.hpp"
#include "hamcert/families.hpp"
#include "hamcert/graph.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/harness.hpp"
#include "hamcert/random.hpp"
#include "hamcert/rational.hpp"
#include "hamcert/spectral.hpp"

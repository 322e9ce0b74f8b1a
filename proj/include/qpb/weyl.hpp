#pragma once

#include "qpb/weyl/checks.hpp"
#include "qpb/weyl/matrix_realize.hpp"
#include "qpb/weyl/operator_poly.hpp"
#include "qpb/weyl/parser.hpp"
#include "qpb/weyl/scalar.hpp"

#pragma once

// Umbrella header for the nullfil library.

#include "algebra.hpp"
#include "commpoly.hpp"
#include "element.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "images.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "rewrite.hpp"
#include "scalar.hpp"
#include "term.hpp"

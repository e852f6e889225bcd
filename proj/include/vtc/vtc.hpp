#pragma once

#include "vtc/exact/rat.hpp"
#include "vtc/exact/poly.hpp"
#include "vtc/exact/ratfunc.hpp"
#include "vtc/linalg.hpp"
#include "vtc/dirlim/graded.hpp"
#include "vtc/dirlim/system.hpp"
#include "vtc/dirlim/limit.hpp"
#include "vtc/dirlim/inclusion.hpp"
#include "vtc/dirlim/tensor.hpp"
#include "vtc/dirlim/json.hpp"
#include "vtc/catdata/label.hpp"
#include "vtc/catdata/fusion_element.hpp"
#include "vtc/catdata/category.hpp"
#include "vtc/fusion.hpp"
#include "vtc/induction.hpp"
#include "vtc/io.hpp"

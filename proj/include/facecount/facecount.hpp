#pragma once

#include "facecount/binomial.hpp"
#include "facecount/constructions.hpp"
#include "facecount/face_lattice.hpp"
#include "facecount/families.hpp"
#include "facecount/formulas.hpp"
#include "facecount/fvector.hpp"
#include "facecount/isomorphism.hpp"
#include "facecount/numeric.hpp"
#include "facecount/parallel.hpp"
#include "facecount/polytope.hpp"
#include "facecount/serialize.hpp"
#include "facecount/verifier.hpp"

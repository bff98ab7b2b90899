#pragma once

#include "schumult/document.hpp"
#include "schumult/errors.hpp"
#include "schumult/exact.hpp"
#include "schumult/multiplicity.hpp"
#include "schumult/paths.hpp"
#include "schumult/render.hpp"
#include "schumult/schubert.hpp"
#include "schumult/tableaux.hpp"
#include "schumult/verify.hpp"

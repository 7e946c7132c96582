#pragma once

// Umbrella header: exact U_q(sl2) module-algebra workbench over the
// Laurent-extended quantum plane.

#include "qplane/action.hpp"
#include "qplane/autgroup.hpp"
#include "qplane/errors.hpp"
#include "qplane/indeterminates.hpp"
#include "qplane/json_io.hpp"
#include "qplane/line.hpp"
#include "qplane/pbw.hpp"
#include "qplane/plane.hpp"
#include "qplane/polynomial.hpp"
#include "qplane/rational.hpp"
#include "qplane/scalar.hpp"
#include "qplane/search.hpp"
#include "qplane/verifier.hpp"

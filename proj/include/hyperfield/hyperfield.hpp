#pragma once

// Finite Krasner hyperfields: representation, axiom verification,
// classification up to isomorphism, and extension digraphs.

#include "hyperfield/catalog.hpp"
#include "hyperfield/constructors.hpp"
#include "hyperfield/core.hpp"
#include "hyperfield/dot.hpp"
#include "hyperfield/enumerate.hpp"
#include "hyperfield/gf.hpp"
#include "hyperfield/groups.hpp"
#include "hyperfield/morphisms.hpp"
#include "hyperfield/serialize.hpp"
#include "hyperfield/verify.hpp"

#pragma once
// Umbrella header.

#include "monodraw/signature.hpp"
#include "monodraw/classify.hpp"
#include "monodraw/stats.hpp"
#include "monodraw/construct.hpp"
#include "monodraw/transform.hpp"
#include "monodraw/search.hpp"
#include "monodraw/shellab.hpp"

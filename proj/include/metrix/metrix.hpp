// Umbrella header: everything needed to compute, serialize and rank metrics.
#pragma once

#include "metrix/analyzer.hpp"
#include "metrix/annotator.hpp"
#include "metrix/anova.hpp"
#include "metrix/cohesion.hpp"
#include "metrix/config.hpp"
#include "metrix/conllu.hpp"
#include "metrix/diversity.hpp"
#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/lexical_metrics.hpp"
#include "metrix/lexicons.hpp"
#include "metrix/pipeline.hpp"
#include "metrix/readability.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/stemmer.hpp"
#include "metrix/surface.hpp"
#include "metrix/syllables.hpp"
#include "metrix/syntax.hpp"
#include "metrix/utf8.hpp"

#pragma once

#include "dso/audit.hpp"
#include "dso/charpoly.hpp"
#include "dso/classify.hpp"
#include "dso/closed_form.hpp"
#include "dso/conjecture.hpp"
#include "dso/corpus_audit.hpp"
#include "dso/enumerate.hpp"
#include "dso/families.hpp"
#include "dso/format.hpp"
#include "dso/graph.hpp"
#include "dso/graph_io.hpp"
#include "dso/indices.hpp"
#include "dso/matrix.hpp"
#include "dso/polynomial.hpp"
#include "dso/spectrum.hpp"

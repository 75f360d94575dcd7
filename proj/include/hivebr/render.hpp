#pragma once

#include <string>

#include "hivebr/gt_pattern.hpp"
#include "hivebr/hive.hpp"
#include "hivebr/tableau.hpp"

namespace hivebr {

enum class RenderFormat { ascii, latex };

// ASCII tableaux mark inner cells with '.'; triangular arrays are printed
// apex up with centered rows. LaTeX output mirrors the skew-macro and
// tikz triangle displays. All output is byte-deterministic.
std::string render(const SkewTableau& t, RenderFormat format);
std::string render(const GTPattern& p, RenderFormat format);
std::string render(const Hive& h, RenderFormat format);

} // namespace hivebr

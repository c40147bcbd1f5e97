// Static SVG rendering of a purity/concurrence sweep. The plot layer
// consumes the CSV text only, so the rendered curves are exactly the
// serialized values.
#pragma once

#include <string>

namespace hvh {

// Two stacked panels (purity on top, concurrence below), omega*t on the
// horizontal axis, measure in [0,1] on the vertical axis. Quantum curves
// are dashed, hybrid curves solid. The title carries the given label.
std::string svg_from_csv(const std::string& csv_text, const std::string& label);

}  // namespace hvh

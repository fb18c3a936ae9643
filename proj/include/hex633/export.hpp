#pragma once

#include <ostream>
#include <vector>

#include "hex633/honeycomb.hpp"
#include "hex633/projection.hpp"

namespace hex633 {

// All writers emit UTF-8 with LF line endings and are byte-deterministic
// for identical inputs.  Floats are printed with 17 significant digits.

// Single JSON document: metadata, centers, adjacency, cells, vertices.
void export_json(const HoneycombGraph& graph, BallModel model, std::ostream& out);

// Wavefront OBJ: corner points as "v", per-cell hexagon boundary edges as
// "l", and one 6-sided "f" per (hexagon, cell) with a complete ring.
void export_obj(const HoneycombGraph& graph, BallModel model, std::ostream& out);

// Header "index,d1,d2,ca,cb,trace,det,x,y,z", one row per center.
void export_csv(const std::vector<LatticePoint>& centers, BallModel model,
                std::ostream& out);

// Centers-only JSON document (metadata + centers arrays).
void export_centers_json(const std::vector<LatticePoint>& centers, std::int64_t trace_bound,
                         BallModel model, std::ostream& out);

}  // namespace hex633

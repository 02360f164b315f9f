#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "crowdflow/extraction.hpp"
#include "crowdflow/flow.hpp"
#include "crowdflow/synthetic.hpp"
#include "crowdflow/types.hpp"

// File formats: canonical annotation CSV ("frame,x,y"), the CDM1 binary
// density-map format, JSON-lines flow reports, and plain-text scene specs.
// All formats are byte-deterministic for identical inputs.

namespace crowdflow {

/// Parses the canonical CSV: one `frame,x,y` record per head, an optional
/// literal header line, frames not necessarily contiguous. Returns one
/// FrameAnnotations per frame id, ascending. Out-of-bounds points are an
/// error naming the line unless clip_out_of_bounds is set, in which case they
/// are clamped into the frame.
std::vector<FrameAnnotations> parse_annotations(const std::filesystem::path& path,
                                                FrameDims dims,
                                                bool clip_out_of_bounds = false);

void write_annotations_csv(std::span<const FrameAnnotations> frames,
                           const std::filesystem::path& path);

/// Centroid sets share the annotation CSV grammar.
std::vector<CentroidSet> read_centroid_csv(const std::filesystem::path& path);
void write_centroid_csv(std::span<const CentroidSet> sets,
                        const std::filesystem::path& path);

/// CDM1 binary format: magic "CDM1", u32 LE width, u32 LE height, one kind
/// byte (0 = Crowd, 1 = Centroid), then width*height f32 LE cells, row-major,
/// top row first. Reading back reproduces cells to f32 precision.
void write_density_map(const DensityMap& map, const std::filesystem::path& path);
DensityMap read_density_map(const std::filesystem::path& path);

/// One flow report line per frame pair, with the configs that produced it and
/// the wall time spent in detect_flow (0.0 when timing is disabled so that
/// identical invocations stay byte-identical).
struct FlowReportEntry {
  FlowResult result;
  double elapsed_ms = 0.0;
  ExtractionConfig extraction;
  MatchConfig matching;
};

void write_flow_report(std::span<const FlowReportEntry> entries,
                       const std::filesystem::path& path);
std::vector<FlowReportEntry> read_flow_report(const std::filesystem::path& path);

/// Plain-text scene spec: global `key = value` lines (width, height, frames,
/// seed) and one `[group]` section per group (center, members, spread,
/// velocity, birth, death). '#' starts a comment. See README for the grammar.
SceneSpec parse_scene_spec(const std::filesystem::path& path);

}  // namespace crowdflow

#pragma once

#include <optional>
#include <string>

#include "mukai/cones.hpp"
#include "mukai/duality.hpp"
#include "mukai/flips.hpp"
#include "mukai/sod.hpp"

namespace mukai {

/// Everything the tool can say about one genus, assembled once and rendered
/// by the exporters below. Construction re-checks the cross-module
/// invariants that tie the pieces together.
struct GenusReport {
    GenusContext ctx;
    WallSystem walls;
    SequenceSummary sequence;
    ChamberTable chambers;
    VisitorVerdict verdict;
    std::vector<SodBlock> blocks;
    Int total_blocks;
    std::optional<DualityTable> duality;
};

GenusReport assemble_report(const GenusContext& ctx);

enum class Format { Md, Csv, Json };

/// Parses "md" / "csv" / "json"; anything else throws std::invalid_argument.
Format parse_format(const std::string& name);

/// The wall table with the eight canonical columns
/// i | (c,d) | mu | k+ | k- | k+-k- | v_{c,d} | dim M(v_{c,d}),
/// rows ordered by i then ascending c. Deterministic bytes: plain ASCII,
/// single-space cell padding, reduced fractions.
std::string render_table_md(const GenusReport& report);
std::string render_table_csv(const GenusReport& report);

/// Full report as JSON (schema "v1"): genus, eta, nu, parity, walls,
/// chambers, verdict (with the block ledger), duality|null, divisorial|null.
std::string render_report_json(const GenusReport& report);

std::string render_duality_md(const GenusReport& report);
std::string render_duality_json(const GenusReport& report);
std::string render_sod_md(const GenusReport& report);
std::string render_sod_json(const GenusReport& report);
std::string render_cones_md(const GenusReport& report);
std::string render_cones_json(const GenusReport& report);
std::string render_lattice_md(const GenusReport& report);
std::string render_lattice_json(const GenusReport& report);

std::string rat_str(const Rat& q);
std::string pic_str(const PicClass& p);

} // namespace mukai

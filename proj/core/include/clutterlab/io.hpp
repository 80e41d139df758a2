#pragma once

#include <optional>
#include <string>

#include "clutterlab/clutter.hpp"
#include "clutterlab/qpq.hpp"

namespace clutterlab {

/// Generator metadata carried in a "# @qpq p=.. q=.. f=.." comment
/// (text format) or a "qpq" object (JSON format).
struct QpqMeta {
    int p = 0;
    int q = 0;
    std::string fspec;  // FSpec string form

    bool operator==(const QpqMeta&) const = default;
};

struct LoadOptions {
    /// Accept inclusion-violating edge families and minimalize on load.
    bool hypergraph_mode = false;
};

struct LoadedClutter {
    Clutter clutter;
    std::optional<QpqMeta> qpq;
    bool minimalized = false;  // hypergraph mode had to drop edges
};

/// Text format, one clutter per file:
///   # comment
///   vertices: a b c
///   edge: a c
/// Edge sets violating the clutter invariants are rejected unless
/// hypergraph mode is on.
LoadedClutter parse_clutter_text(const std::string& text, const LoadOptions& opts = {});
LoadedClutter parse_clutter_json_text(const std::string& text, const LoadOptions& opts = {});

/// Dispatches on a ".json" extension, otherwise parses the text format.
LoadedClutter load_clutter_file(const std::string& path, const LoadOptions& opts = {});

std::string clutter_to_text(const Clutter& c, const std::optional<QpqMeta>& meta = std::nullopt);
std::string clutter_to_json_text(const Clutter& c, const std::optional<QpqMeta>& meta = std::nullopt);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

QpqMeta meta_of(const QpqDescriptor& desc);

/// Rebuilds the descriptor a loaded file was generated from. The universe
/// labels must match the generator's pinned order.
QpqDescriptor descriptor_from_meta(const QpqMeta& meta, const Clutter& loaded);

}  // namespace clutterlab

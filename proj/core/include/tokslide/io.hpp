#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tokslide/graph.hpp"
#include "tokslide/instance.hpp"

namespace tokslide::io {

// Text formats (whitespace separated, `#` starts a comment):
//
//   graph <n> <m>
//   v <name>            (n lines)
//   e <name> <name>     (m lines)
//   problem VC|IS|DS|FVS
//   tokens <name> ...
//   budget <int>
//
// The last three lines turn a graph file into an instance file. Move files
// hold one `move <from> <to>` per line.

/// Parses a graph block. When `allow_instance_lines` is set, trailing
/// problem/tokens/budget lines are accepted and ignored.
Graph parse_graph(std::string_view text, bool allow_instance_lines = false);
DiscoveryInstance parse_instance(std::string_view text);
MoveSequence parse_moves(std::string_view text, const Graph& g);

std::string format_graph(const Graph& g);
std::string format_instance(const DiscoveryInstance& inst);
std::string format_moves(const Graph& g, const MoveSequence& seq);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tokslide::io

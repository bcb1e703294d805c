#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphshift/dynamic_graph.hpp"
#include "graphshift/types.hpp"

namespace graphshift {

// An event with an optional target iteration ("@i " prefix in stream files).
struct ScheduledEvent {
  std::optional<std::uint64_t> iteration;
  ChangeEvent event;
};

// Edge-list files: one "u v" pair per line, unsigned decimal ids,
// '#' comment lines and blank lines ignored.
std::vector<Edge> read_edge_list(std::istream& in);
std::vector<Edge> read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const std::vector<Edge>& edges);
void write_edge_list_file(const std::string& path, const std::vector<Edge>& edges);

// Change-stream files: one event per line,
//   "AV u" | "RV u" | "AE u v" | "RE u v"
// optionally prefixed by "@i " giving the iteration at which to apply.
std::vector<ScheduledEvent> read_change_stream(std::istream& in);
std::vector<ScheduledEvent> read_change_stream_file(const std::string& path);
void write_change_stream(std::ostream& out, const std::vector<ScheduledEvent>& events);
void write_change_stream_file(const std::string& path,
                              const std::vector<ScheduledEvent>& events);

}  // namespace graphshift

#include "graphshift/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphshift {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& line) {
  throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": '" +
                           line + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

std::vector<Edge> read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    VertexId u, v;
    if (!(ss >> u >> v)) parse_fail(line_no, line);
    edges.emplace_back(u, v);
  }
  return edges;
}

std::vector<Edge> read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const std::vector<Edge>& edges) {
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const std::vector<Edge>& edges) {
  auto out = open_output(path);
  write_edge_list(out, edges);
}

std::vector<ScheduledEvent> read_change_stream(std::istream& in) {
  std::vector<ScheduledEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) parse_fail(line_no, line);

    ScheduledEvent ev;
    if (tok.size() > 1 && tok[0] == '@') {
      try {
        ev.iteration = std::stoull(tok.substr(1));
      } catch (const std::exception&) {
        parse_fail(line_no, line);
      }
      if (!(ss >> tok)) parse_fail(line_no, line);
    }

    bool needs_two = false;
    if (tok == "AV") {
      ev.event.kind = ChangeKind::AddVertex;
    } else if (tok == "RV") {
      ev.event.kind = ChangeKind::RemoveVertex;
    } else if (tok == "AE") {
      ev.event.kind = ChangeKind::AddEdge;
      needs_two = true;
    } else if (tok == "RE") {
      ev.event.kind = ChangeKind::RemoveEdge;
      needs_two = true;
    } else {
      parse_fail(line_no, line);
    }

    if (!(ss >> ev.event.u)) parse_fail(line_no, line);
    if (needs_two && !(ss >> ev.event.v)) parse_fail(line_no, line);
    events.push_back(ev);
  }
  return events;
}

std::vector<ScheduledEvent> read_change_stream_file(const std::string& path) {
  auto in = open_input(path);
  return read_change_stream(in);
}

void write_change_stream(std::ostream& out, const std::vector<ScheduledEvent>& events) {
  for (const auto& ev : events) {
    if (ev.iteration) out << '@' << *ev.iteration << ' ';
    switch (ev.event.kind) {
      case ChangeKind::AddVertex: out << "AV " << ev.event.u; break;
      case ChangeKind::RemoveVertex: out << "RV " << ev.event.u; break;
      case ChangeKind::AddEdge: out << "AE " << ev.event.u << ' ' << ev.event.v; break;
      case ChangeKind::RemoveEdge: out << "RE " << ev.event.u << ' ' << ev.event.v; break;
    }
    out << '\n';
  }
}

void write_change_stream_file(const std::string& path,
                              const std::vector<ScheduledEvent>& events) {
  auto out = open_output(path);
  write_change_stream(out, events);
}

}  // namespace graphshift

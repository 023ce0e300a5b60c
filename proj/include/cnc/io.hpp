#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cnc/foliation.hpp"
#include "cnc/representation.hpp"
#include "cnc/separation.hpp"
#include "cnc/space.hpp"

namespace cnc::io {

struct NamedSpace {
  std::string name;
  ConnectivitySpace space;
};

struct NamedTopology {
  std::string name;
  separation::FiniteTopology topology;
};

struct NamedDevice {
  std::string name;
  separation::SeparationDevice device;
};

struct NamedMap {
  std::string name;
  std::string from;
  std::string to;
  SetMap map;
};

struct NamedRep {
  std::string name;
  std::string from;
  std::string to;
  representation::Representation rep;
};

struct NamedFoliation {
  std::string name;
  std::string internal;
  std::string external;
  foliation::Foliation fol;
};

/// A parsed file (or several): named entities with resolved references.
struct Bundle {
  std::vector<NamedSpace> spaces;
  std::vector<NamedTopology> topologies;
  std::vector<NamedDevice> devices;
  std::vector<NamedMap> maps;
  std::vector<NamedRep> representations;
  std::vector<NamedFoliation> foliations;

  const NamedSpace* find_space(std::string_view name) const;
  const NamedTopology* find_topology(std::string_view name) const;
  const NamedDevice* find_device(std::string_view name) const;
  const NamedMap* find_map(std::string_view name) const;
  const NamedRep* find_representation(std::string_view name) const;
  const NamedFoliation* find_foliation(std::string_view name) const;
  bool has_name(std::string_view name) const;
};

struct ParseOptions {
  /// Close parsed topologies under union/intersection instead of rejecting
  /// unclosed ones. Only the close-topology command turns this on.
  bool complete_topologies = false;
  /// Skip the representation morphism-law check at load time (structural
  /// checks still run). Used by validate-rep to report the verdict itself.
  bool defer_representation_law = false;
};

/// Parses the line-oriented document grammar. '#' starts a comment,
/// keywords are case-sensitive, blocks start with
/// space/topology/device/map/representation/foliation.
Bundle parse(std::string_view text, const std::string& filename = "<input>",
             const ParseOptions& options = {});

/// Parses another document into an existing bundle (cross-file references
/// resolve against everything parsed before).
void parse_into(Bundle& bundle, std::string_view text, const std::string& filename,
                const ParseOptions& options = {});

/// Canonical presentation of a structure for rendering: the semantic
/// integral flag plus a generator family reproducing kappa (the stored
/// generators, or the irreducibles of a delegated structure).
struct SpacePresentation {
  bool integral;
  std::vector<Subset> generators;
};

SpacePresentation present(const ConnectivitySpace& space);

std::string render_space(const std::string& name, const ConnectivitySpace& space);
std::string render_topology(const std::string& name, const separation::FiniteTopology& topology);
std::string render_device(const std::string& name, const separation::SeparationDevice& device);
std::string render_map(const NamedMap& map);
std::string render_representation(const NamedRep& rep);
std::string render_foliation(const NamedFoliation& fol);
std::string render_bundle(const Bundle& bundle);

}  // namespace cnc::io

#include "cnc/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "cnc/order.hpp"

namespace cnc::io {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class Parser {
 public:
  Parser(Bundle& bundle, std::string_view text, std::string filename, ParseOptions options)
      : bundle_(bundle), text_(text), filename_(std::move(filename)), options_(options) {}

  void run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      std::string_view line = text_.substr(
          pos, eol == std::string_view::npos ? text_.size() - pos : eol - pos);
      ++lineno_;
      handle_line(line);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    finish_block();
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(filename_, lineno_, column, message);
  }

  [[noreturn]] void fail_block(const std::string& message) const {
    throw ParseError(filename_, block_line_, 1, message);
  }

  void require_unique_name(const std::string& name, std::size_t column) {
    if (bundle_.has_name(name)) fail(column, "duplicate name '" + name + "'");
  }

  const NamedSpace& resolve_space(const Token& token) const {
    const NamedSpace* s = bundle_.find_space(token.text);
    if (!s) fail(token.column, "unknown space '" + token.text + "'");
    return *s;
  }

  std::size_t resolve_point(const GroundSet& ground, const Token& token) const {
    auto index = ground.index_of(token.text);
    if (!index) fail(token.column, "unknown point '" + token.text + "'");
    return *index;
  }

  Subset resolve_points(const GroundSet& ground, const std::vector<Token>& tokens,
                        std::size_t first) const {
    Subset out;
    for (std::size_t i = first; i < tokens.size(); ++i)
      out |= Subset::single(resolve_point(ground, tokens[i]));
    return out;
  }

  void handle_line(std::string_view raw) {
    auto tokens = tokenize(raw);
    if (tokens.empty()) return;
    const std::string& head = tokens[0].text;
    if (head == "space" || head == "topology" || head == "device" || head == "map" ||
        head == "representation" || head == "foliation") {
      finish_block();
      open_block(tokens, raw);
      return;
    }
    if (block_ == Kind::None) fail(tokens[0].column, "content outside of a block");
    body_line(tokens, raw);
  }

  enum class Kind { None, Space, Topology, Device, Map, Representation, Foliation };

  void open_block(const std::vector<Token>& tokens, std::string_view) {
    const std::string& head = tokens[0].text;
    block_line_ = lineno_;
    name_.clear();
    points_.reset();
    integral_.reset();
    generators_.clear();
    opens_.clear();
    pairs_.clear();
    sends_.clear();
    images_.clear();
    from_.clear();
    to_.clear();

    if (head == "space" || head == "topology" || head == "device") {
      if (tokens.size() != 2) fail(tokens[0].column, head + " block expects exactly a name");
      require_unique_name(tokens[1].text, tokens[1].column);
      name_ = tokens[1].text;
      block_ = head == "space"      ? Kind::Space
               : head == "topology" ? Kind::Topology
                                    : Kind::Device;
      return;
    }
    if (head == "map" || head == "representation") {
      if (tokens.size() != 6 || tokens[2].text != "from" || tokens[4].text != "to")
        fail(tokens[0].column, head + " block expects: " + head + " NAME from SPACE to SPACE");
      require_unique_name(tokens[1].text, tokens[1].column);
      name_ = tokens[1].text;
      from_space_ = &resolve_space(tokens[3]);
      to_space_ = &resolve_space(tokens[5]);
      from_ = tokens[3].text;
      to_ = tokens[5].text;
      block_ = head == "map" ? Kind::Map : Kind::Representation;
      return;
    }
    // foliation NAME internal SPACE external SPACE
    if (tokens.size() != 6 || tokens[2].text != "internal" || tokens[4].text != "external")
      fail(tokens[0].column, "foliation block expects: foliation NAME internal SPACE external SPACE");
    require_unique_name(tokens[1].text, tokens[1].column);
    name_ = tokens[1].text;
    from_space_ = &resolve_space(tokens[3]);
    to_space_ = &resolve_space(tokens[5]);
    from_ = tokens[3].text;
    to_ = tokens[5].text;
    block_ = Kind::Foliation;
  }

  void body_line(const std::vector<Token>& tokens, std::string_view raw) {
    const std::string& head = tokens[0].text;
    switch (block_) {
      case Kind::Space:
        if (head == "points") {
          set_points(tokens);
        } else if (head == "integral") {
          if (integral_) fail(tokens[0].column, "duplicate integral line");
          if (tokens.size() != 2 || (tokens[1].text != "true" && tokens[1].text != "false"))
            fail(tokens[0].column, "integral expects true or false");
          integral_ = tokens[1].text == "true";
        } else if (head == "generator") {
          generators_.push_back(resolve_points(require_points(tokens), tokens, 1));
        } else {
          fail(tokens[0].column, "unexpected '" + head + "' in a space block");
        }
        break;
      case Kind::Topology:
        if (head == "points") {
          set_points(tokens);
        } else if (head == "open") {
          opens_.push_back(resolve_points(require_points(tokens), tokens, 1));
        } else {
          fail(tokens[0].column, "unexpected '" + head + "' in a topology block");
        }
        break;
      case Kind::Device:
        if (head == "points") {
          set_points(tokens);
        } else if (head == "pair") {
          pair_line(tokens, raw);
        } else {
          fail(tokens[0].column, "unexpected '" + head + "' in a device block");
        }
        break;
      case Kind::Map:
        if (head == "send") {
          if (tokens.size() != 4 || tokens[2].text != "->")
            fail(tokens[0].column, "send expects: send POINT -> POINT");
          std::size_t source = resolve_point(from_space_->space.ground(), tokens[1]);
          std::size_t target = resolve_point(to_space_->space.ground(), tokens[3]);
          if (sends_.count(source))
            fail(tokens[1].column, "duplicate send for point '" + tokens[1].text + "'");
          sends_[source] = target;
        } else {
          fail(tokens[0].column, "unexpected '" + head + "' in a map block");
        }
        break;
      case Kind::Representation:
        if (head == "image") {
          if (tokens.size() < 4 || tokens[2].text != "->")
            fail(tokens[0].column, "image expects: image POINT -> POINT...");
          std::size_t source = resolve_point(from_space_->space.ground(), tokens[1]);
          if (images_.count(source))
            fail(tokens[1].column, "duplicate image for point '" + tokens[1].text + "'");
          Subset img;
          for (std::size_t i = 3; i < tokens.size(); ++i)
            img |= Subset::single(resolve_point(to_space_->space.ground(), tokens[i]));
          images_[source] = img;
        } else {
          fail(tokens[0].column, "unexpected '" + head + "' in a representation block");
        }
        break;
      case Kind::Foliation:
        fail(tokens[0].column, "foliation blocks have no body lines");
      case Kind::None:
        fail(tokens[0].column, "content outside of a block");
    }
  }

  void set_points(const std::vector<Token>& tokens) {
    if (points_) fail(tokens[0].column, "duplicate points line");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i < tokens.size(); ++i) labels.push_back(tokens[i].text);
    try {
      points_.emplace(std::move(labels));
    } catch (const InvariantViolation& e) {
      fail(tokens[0].column, e.what());
    }
  }

  const GroundSet& require_points(const std::vector<Token>& tokens) const {
    if (!points_) fail(tokens[0].column, "points must be declared first");
    return *points_;
  }

  void pair_line(const std::vector<Token>& tokens, std::string_view raw) {
    const GroundSet& ground = require_points(tokens);
    // pair | p ... | q ... |  -- three pipes delimiting the two groups.
    std::size_t after = tokens[0].column - 1 + 4;  // past the keyword
    std::string_view rest = raw.substr(std::min(after, raw.size()));
    if (std::size_t hash = rest.find('#'); hash != std::string_view::npos)
      rest = rest.substr(0, hash);
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || rest[i] == '|') {
        parts.push_back(rest.substr(begin, i - begin));
        begin = i + 1;
      }
    }
    auto blank = [](std::string_view s) {
      return s.find_first_not_of(" \t\r") == std::string_view::npos;
    };
    if (parts.size() != 4 || !blank(parts.front()) || !blank(parts.back()))
      fail(tokens[0].column, "pair expects: pair | POINTS | POINTS |");
    Subset sides[2];
    for (int s = 0; s < 2; ++s) {
      for (const Token& t : tokenize(parts[s + 1]))
        sides[s] |= Subset::single(resolve_point(ground, t));
    }
    pairs_.push_back({sides[0], sides[1]});
  }

  void finish_block() {
    switch (block_) {
      case Kind::None:
        break;
      case Kind::Space: {
        if (!points_) fail_block("space block is missing its points line");
        if (!integral_) fail_block("space block is missing its integral line");
        try {
          bundle_.spaces.push_back(
              {name_, ConnectivitySpace(*points_, generators_, *integral_)});
        } catch (const Error& e) {
          fail_block(e.what());
        }
        break;
      }
      case Kind::Topology: {
        if (!points_) fail_block("topology block is missing its points line");
        try {
          if (options_.complete_topologies) {
            bundle_.topologies.push_back({name_, separation::close_topology(*points_, opens_)});
          } else {
            bundle_.topologies.push_back({name_, separation::FiniteTopology(*points_, opens_)});
          }
        } catch (const Error& e) {
          fail_block(e.what());
        }
        break;
      }
      case Kind::Device: {
        if (!points_) fail_block("device block is missing its points line");
        try {
          bundle_.devices.push_back({name_, separation::SeparationDevice(*points_, pairs_)});
        } catch (const Error& e) {
          fail_block(e.what());
        }
        break;
      }
      case Kind::Map: {
        const GroundSet& source = from_space_->space.ground();
        std::vector<std::size_t> images(source.size());
        for (std::size_t i = 0; i < source.size(); ++i) {
          auto it = sends_.find(i);
          if (it == sends_.end())
            fail_block("map is not total: no send for point '" + source.label(i) + "'");
          images[i] = it->second;
        }
        bundle_.maps.push_back({name_, from_, to_,
                                SetMap(source, to_space_->space.ground(), std::move(images))});
        break;
      }
      case Kind::Representation: {
        const GroundSet& source = from_space_->space.ground();
        std::vector<Subset> images(source.size());
        for (std::size_t i = 0; i < source.size(); ++i) {
          auto it = images_.find(i);
          if (it == images_.end())
            fail_block("representation is not total: no image for point '" + source.label(i) +
                       "'");
          images[i] = it->second;
        }
        for (Subset img : images)
          if (img.empty()) fail_block("representation has an empty image");
        try {
          auto rep = options_.defer_representation_law
                         ? representation::trusted_representation(from_space_->space,
                                                                  to_space_->space, images)
                         : representation::Representation::validate(
                               from_space_->space, to_space_->space, images);
          bundle_.representations.push_back({name_, from_, to_, std::move(rep)});
        } catch (const Error& e) {
          fail_block(e.what());
        }
        break;
      }
      case Kind::Foliation: {
        try {
          bundle_.foliations.push_back(
              {name_, from_, to_,
               foliation::Foliation(from_space_->space, to_space_->space)});
        } catch (const Error& e) {
          fail_block(e.what());
        }
        break;
      }
    }
    block_ = Kind::None;
  }

  Bundle& bundle_;
  std::string_view text_;
  std::string filename_;
  ParseOptions options_;
  std::size_t lineno_ = 0;
  std::size_t block_line_ = 0;

  Kind block_ = Kind::None;
  std::string name_;
  std::optional<GroundSet> points_;
  std::optional<bool> integral_;
  std::vector<Subset> generators_;
  std::vector<Subset> opens_;
  std::vector<separation::SeparatingPair> pairs_;
  std::map<std::size_t, std::size_t> sends_;
  std::map<std::size_t, Subset> images_;
  std::string from_;
  std::string to_;
  const NamedSpace* from_space_ = nullptr;
  const NamedSpace* to_space_ = nullptr;
};

}  // namespace

const NamedSpace* Bundle::find_space(std::string_view name) const {
  for (const auto& e : spaces)
    if (e.name == name) return &e;
  return nullptr;
}

const NamedTopology* Bundle::find_topology(std::string_view name) const {
  for (const auto& e : topologies)
    if (e.name == name) return &e;
  return nullptr;
}

const NamedDevice* Bundle::find_device(std::string_view name) const {
  for (const auto& e : devices)
    if (e.name == name) return &e;
  return nullptr;
}

const NamedMap* Bundle::find_map(std::string_view name) const {
  for (const auto& e : maps)
    if (e.name == name) return &e;
  return nullptr;
}

const NamedRep* Bundle::find_representation(std::string_view name) const {
  for (const auto& e : representations)
    if (e.name == name) return &e;
  return nullptr;
}

const NamedFoliation* Bundle::find_foliation(std::string_view name) const {
  for (const auto& e : foliations)
    if (e.name == name) return &e;
  return nullptr;
}

bool Bundle::has_name(std::string_view name) const {
  return find_space(name) || find_topology(name) || find_device(name) || find_map(name) ||
         find_representation(name) || find_foliation(name);
}

Bundle parse(std::string_view text, const std::string& filename, const ParseOptions& options) {
  Bundle bundle;
  parse_into(bundle, text, filename, options);
  return bundle;
}

void parse_into(Bundle& bundle, std::string_view text, const std::string& filename,
                const ParseOptions& options) {
  Parser(bundle, text, filename, options).run();
}

SpacePresentation present(const ConnectivitySpace& space) {
  if (space.generator_backed()) return {space.integral(), space.generators()};
  bool integral = is_integral_semantically(space);
  std::vector<Subset> generators;
  for (Subset k : order::irreducibles(space).elements)
    if (!(integral && k.count() == 1)) generators.push_back(k);
  return {integral, std::move(generators)};
}

namespace {

void append_points(std::string& out, const GroundSet& ground, Subset set) {
  set.for_each([&](std::size_t i) {
    out += ' ';
    out += ground.label(i);
  });
}

void append_points_line(std::string& out, const GroundSet& ground) {
  out += "points";
  append_points(out, ground, ground.full());
  out += '\n';
}

}  // namespace

std::string render_space(const std::string& name, const ConnectivitySpace& space) {
  SpacePresentation p = present(space);
  std::string out = "space " + name + "\n";
  append_points_line(out, space.ground());
  out += p.integral ? "integral true\n" : "integral false\n";
  for (Subset g : p.generators) {
    out += "generator";
    append_points(out, space.ground(), g);
    out += '\n';
  }
  return out;
}

std::string render_topology(const std::string& name,
                            const separation::FiniteTopology& topology) {
  std::string out = "topology " + name + "\n";
  append_points_line(out, topology.ground());
  for (Subset open : topology.opens()) {
    if (open.empty() || open == topology.ground().full()) continue;  // implicit
    out += "open";
    append_points(out, topology.ground(), open);
    out += '\n';
  }
  return out;
}

std::string render_device(const std::string& name, const separation::SeparationDevice& device) {
  std::string out = "device " + name + "\n";
  append_points_line(out, device.ground());
  for (const auto& pair : device.pairs()) {
    out += "pair |";
    append_points(out, device.ground(), pair.s);
    out += " |";
    append_points(out, device.ground(), pair.t);
    out += " |\n";
  }
  return out;
}

std::string render_map(const NamedMap& map) {
  std::string out = "map " + map.name + " from " + map.from + " to " + map.to + "\n";
  for (std::size_t i = 0; i < map.map.source().size(); ++i)
    out += "send " + map.map.source().label(i) + " -> " +
           map.map.target().label(map.map(i)) + "\n";
  return out;
}

std::string render_representation(const NamedRep& rep) {
  std::string out = "representation " + rep.name + " from " + rep.from + " to " + rep.to + "\n";
  for (std::size_t i = 0; i < rep.rep.object().size(); ++i) {
    out += "image " + rep.rep.object().ground().label(i) + " ->";
    append_points(out, rep.rep.space().ground(), rep.rep.image(i));
    out += '\n';
  }
  return out;
}

std::string render_foliation(const NamedFoliation& fol) {
  return "foliation " + fol.name + " internal " + fol.internal + " external " + fol.external +
         "\n";
}

std::string render_bundle(const Bundle& bundle) {
  std::string out;
  auto gap = [&] {
    if (!out.empty()) out += '\n';
  };
  for (const auto& e : bundle.spaces) {
    gap();
    out += render_space(e.name, e.space);
  }
  for (const auto& e : bundle.topologies) {
    gap();
    out += render_topology(e.name, e.topology);
  }
  for (const auto& e : bundle.devices) {
    gap();
    out += render_device(e.name, e.device);
  }
  for (const auto& e : bundle.maps) {
    gap();
    out += render_map(e);
  }
  for (const auto& e : bundle.representations) {
    gap();
    out += render_representation(e);
  }
  for (const auto& e : bundle.foliations) {
    gap();
    out += render_foliation(e);
  }
  return out;
}

}  // namespace cnc::io

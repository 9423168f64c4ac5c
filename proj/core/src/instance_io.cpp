#include "betalab/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace betalab {

using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InstanceError("cannot write file: " + path);
  out << text;
}

namespace {

ordered_json parse_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InstanceError("schema: malformed JSON");
  return doc;
}

GroupModel group_from_json(const ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InstanceError("schema: group needs a string 'kind'");
  }
  const std::string kind = doc["kind"].get<std::string>();
  auto integer_field = [&](const char* name) {
    if (!doc.contains(name) || !doc[name].is_number_integer()) {
      throw InstanceError(std::string("schema: group '") + kind +
                          "' needs integer '" + name + "'");
    }
    return doc[name].get<int>();
  };
  if (kind == "cyclic") return GroupModel::cyclic(integer_field("n"));
  if (kind == "integers") return GroupModel::integers();
  if (kind == "free_abelian") {
    return GroupModel::free_abelian(integer_field("rank"));
  }
  if (kind == "free") return GroupModel::free(integer_field("rank"));
  throw InstanceError("schema: unknown group kind '" + kind + "'");
}

ordered_json group_to_json(const GroupModel& group) {
  ordered_json out;
  out["kind"] = group_kind_name(group.kind());
  switch (group.kind()) {
    case GroupKind::Cyclic:
      out["n"] = group.cyclic_order();
      break;
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
      out["rank"] = group.rank();
      break;
    case GroupKind::Integers:
      break;
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  const ordered_json doc = parse_json(json_text);
  if (!doc.is_object()) throw InstanceError("schema: top level must be object");
  for (const char* key : {"points", "metric", "group", "action"}) {
    if (!doc.contains(key)) {
      throw InstanceError(std::string("schema: missing '") + key + "'");
    }
  }

  if (!doc["points"].is_array()) {
    throw InstanceError("schema: 'points' must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& label : doc["points"]) {
    if (!label.is_string()) {
      throw InstanceError("schema: point labels must be strings");
    }
    labels.push_back(label.get<std::string>());
  }
  const int n = static_cast<int>(labels.size());

  if (!doc["metric"].is_array() ||
      static_cast<int>(doc["metric"].size()) != n) {
    throw InstanceError("schema: 'metric' must be an n x n array");
  }
  DistanceMatrix dist(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    const auto& row = doc["metric"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InstanceError("schema: metric row " + std::to_string(i) +
                          " must have " + std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_string()) {
        throw InstanceError("schema: metric entries must be \"p/q\" strings");
      }
      try {
        dist[i][j] = parse_rational(row[j].get<std::string>());
      } catch (const ArgumentError& err) {
        throw InstanceError("schema: metric[" + std::to_string(i) + "][" +
                            std::to_string(j) + "]: " + err.what());
      }
    }
  }
  // Construction reports metric-axiom failures with their witnesses.
  auto space = std::make_shared<const FiniteMetricSpace>(std::move(dist),
                                                         std::move(labels));

  GroupModel group = group_from_json(doc["group"]);

  if (!doc["action"].is_object()) {
    throw InstanceError("schema: 'action' must map generators to images");
  }
  std::vector<Permutation> maps;
  for (int gi = 0; gi < group.rank(); ++gi) {
    const std::string name = "s" + std::to_string(gi + 1);
    if (!doc["action"].contains(name)) {
      throw InstanceError("schema: action is missing generator '" + name +
                          "'");
    }
    const auto& images = doc["action"][name];
    if (!images.is_array() || static_cast<int>(images.size()) != n) {
      throw InstanceError("schema: action '" + name + "' must list " +
                          std::to_string(n) + " image indices");
    }
    Permutation map;
    for (const auto& image : images) {
      if (!image.is_number_integer()) {
        throw InstanceError("schema: action images must be integers");
      }
      map.push_back(image.get<int>());
    }
    maps.push_back(std::move(map));
  }

  Action action(space, group, std::move(maps));

  std::optional<CombSpaceProvenance> provenance;
  if (doc.contains("provenance")) {
    const auto& p = doc["provenance"];
    if (!p.is_object() || !p.contains("period") || !p.contains("depth") ||
        !p.contains("core_metric")) {
      throw InstanceError(
          "schema: provenance needs period, depth and core_metric");
    }
    CombSpaceProvenance prov;
    prov.period = p["period"].get<int>();
    prov.depth = p["depth"].get<int>();
    for (const auto& row : p["core_metric"]) {
      std::vector<Rational> out_row;
      for (const auto& cell : row) {
        out_row.push_back(parse_rational(cell.get<std::string>()));
      }
      prov.core_metric.push_back(std::move(out_row));
    }
    provenance = std::move(prov);
  }

  return Instance{space, group, std::move(action), std::move(provenance)};
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_text_file(path));
  } catch (const InstanceError& err) {
    throw InstanceError(path + ": " + err.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  const FiniteMetricSpace& space = *instance.space;
  ordered_json doc;
  doc["points"] = space.labels();
  ordered_json metric = ordered_json::array();
  for (int i = 0; i < space.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < space.size(); ++j) {
      row.push_back(format_rational(space.distance(i, j)));
    }
    metric.push_back(std::move(row));
  }
  doc["metric"] = std::move(metric);
  doc["group"] = group_to_json(instance.group);
  ordered_json action;
  for (int gi = 0; gi < instance.action.generator_count(); ++gi) {
    action["s" + std::to_string(gi + 1)] = instance.action.generator_map(gi);
  }
  doc["action"] = std::move(action);
  if (instance.provenance.has_value()) {
    ordered_json prov;
    prov["period"] = instance.provenance->period;
    prov["depth"] = instance.provenance->depth;
    ordered_json core = ordered_json::array();
    for (const auto& row : instance.provenance->core_metric) {
      ordered_json out_row = ordered_json::array();
      for (const auto& cell : row) out_row.push_back(format_rational(cell));
      core.push_back(std::move(out_row));
    }
    prov["core_metric"] = std::move(core);
    doc["provenance"] = std::move(prov);
  }
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
  write_text_file(path, serialize_instance(instance));
}

std::string instance_fingerprint(const Instance& instance) {
  return content_fingerprint(serialize_instance(instance));
}

RationalMeasure parse_measure(const std::string& json_text, int space_size) {
  const ordered_json doc = parse_json(json_text);
  if (!doc.is_object()) {
    throw InstanceError("measure literal must be an object");
  }
  std::vector<Rational> weights(space_size, Rational(0));
  for (const auto& [key, value] : doc.items()) {
    int index = -1;
    try {
      index = std::stoi(key);
    } catch (...) {
      throw InstanceError("measure key '" + key + "' is not a point index");
    }
    if (index < 0 || index >= space_size) {
      throw InstanceError("measure point " + key + " outside the space");
    }
    if (!value.is_string()) {
      throw InstanceError("measure weights must be \"p/q\" strings");
    }
    weights[index] = parse_rational(value.get<std::string>());
  }
  try {
    return RationalMeasure(std::move(weights));
  } catch (const ArgumentError& err) {
    throw InstanceError(std::string("measure literal: ") + err.what());
  }
}

std::string serialize_measure(const RationalMeasure& mu) {
  ordered_json doc;
  for (Point x : mu.support()) {
    doc[std::to_string(x)] = format_rational(mu.weight(x));
  }
  return doc.dump();
}

}  // namespace betalab

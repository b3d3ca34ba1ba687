#include "hypercover/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hypercover/errors.hpp"

namespace hypercover {

using nlohmann::json;

namespace {

std::vector<std::uint64_t> nat_list(const json& j, const char* what) {
  if (!j.is_array()) raise(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned())
      raise(Errc::parse_error, std::string(what) + " entries must be naturals");
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

EpSet epset_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::parse_error, "set must be an object");
  if (j.contains("ap")) {
    auto ap = nat_list(j.at("ap"), "ap");
    if (ap.size() != 2) raise(Errc::parse_error, "ap wants [start, step]");
    if (ap[1] == 0) raise(Errc::parse_error, "ap step must be >= 1");
    return EpSet::ap(ap[0], ap[1]);
  }
  std::vector<std::uint64_t> fin;
  if (j.contains("fin")) fin = nat_list(j.at("fin"), "fin");
  std::uint64_t t = j.value("t", std::uint64_t{0});
  std::uint64_t p = j.value("p", std::uint64_t{1});
  std::vector<std::uint64_t> res;
  if (j.contains("res")) res = nat_list(j.at("res"), "res");
  if (p == 0) raise(Errc::parse_error, "period must be >= 1");
  for (std::uint64_t x : res)
    if (x >= p) raise(Errc::parse_error, "residue out of range");
  return EpSet::make(std::move(fin), t, p, std::move(res));
}

json epset_to_json(const EpSet& s) {
  if (s.is_finite()) return json{{"fin", s.finite_part()}};
  return json{{"fin", s.finite_part()},
              {"t", s.threshold()},
              {"p", s.period()},
              {"res", s.residues()}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edges"))
    raise(Errc::parse_error, "instance wants an \"edges\" array");
  if (!j.at("edges").is_array())
    raise(Errc::parse_error, "\"edges\" must be an array");
  std::vector<EpSet> edges;
  for (const auto& e : j.at("edges")) edges.push_back(epset_from_json(e));
  Instance inst;
  try {
    inst.hypergraph = Hypergraph(std::move(edges));
  } catch (const Error& err) {
    raise(Errc::parse_error, err.what());
  }
  if (j.contains("name")) inst.name = j.at("name").get<std::string>();
  if (j.contains("k")) inst.k = j.at("k").get<unsigned>();
  if (j.contains("r")) inst.r = j.at("r").get<unsigned>();
  if (inst.k && inst.r) {
    auto cc = inst.hypergraph.check_c(*inst.k, Card::finite(*inst.r));
    if (!cc.ok())
      raise(Errc::property_violated, "declared C(k,r) fails on load");
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json edges = json::array();
  for (const EpSet& e : inst.hypergraph.edges()) edges.push_back(epset_to_json(e));
  json out{{"edges", edges}};
  if (inst.name) out["name"] = *inst.name;
  if (inst.k) out["k"] = *inst.k;
  if (inst.r) out["r"] = *inst.r;
  return out;
}

Cut cut_from_json(const json& j) {
  if (!j.is_object() || !j.contains("layers"))
    raise(Errc::parse_error, "cut wants a \"layers\" array");
  Cut cut;
  for (const auto& l : j.at("layers")) cut.layers.push_back(epset_from_json(l));
  return cut;
}

json cut_to_json(const Cut& cut) {
  json layers = json::array();
  for (const EpSet& l : cut.layers) layers.push_back(epset_to_json(l));
  return json{{"layers", layers}};
}

BlockOrder order_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::parse_error, "order must be an array of blocks");
  std::vector<BlockOrder::Block> blocks;
  for (const auto& b : j) {
    if (!b.is_object() || !b.contains("ground") || !b.contains("inner"))
      raise(Errc::parse_error, "block wants \"ground\" and \"inner\"");
    BlockOrder::Block blk;
    blk.ground = epset_from_json(b.at("ground"));
    const auto& inner = b.at("inner");
    if (inner.is_string() && inner.get<std::string>() == "nat") {
      blk.inner = BlockOrder::Inner::natural;
    } else if (inner.is_object() && inner.contains("promoted")) {
      blk.inner = BlockOrder::Inner::promoted;
      blk.promoted = inner.at("promoted").get<std::uint64_t>();
    } else if (inner.is_object() && inner.contains("nested")) {
      blk.inner = BlockOrder::Inner::nested;
      blk.sub = std::make_shared<const BlockOrder>(
          order_from_json(inner.at("nested")));
    } else {
      raise(Errc::parse_error, "inner must be \"nat\", {\"promoted\":v} or "
                               "{\"nested\":[...]}");
    }
    blocks.push_back(std::move(blk));
  }
  try {
    return BlockOrder(std::move(blocks));
  } catch (const Error& err) {
    raise(Errc::parse_error, err.what());
  }
}

json order_to_json(const BlockOrder& ord) {
  json out = json::array();
  for (const auto& b : ord.blocks()) {
    json inner;
    switch (b.inner) {
      case BlockOrder::Inner::natural:
        inner = "nat";
        break;
      case BlockOrder::Inner::promoted:
        inner = json{{"promoted", b.promoted}};
        break;
      case BlockOrder::Inner::nested:
        inner = json{{"nested", order_to_json(*b.sub)}};
        break;
    }
    out.push_back(json{{"ground", epset_to_json(b.ground)}, {"inner", inner}});
  }
  return out;
}

WitnessedCover cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("Y") || !j.contains("w"))
    raise(Errc::parse_error, "cover wants \"Y\" and \"w\"");
  auto points = nat_list(j.at("Y"), "Y");
  WitnessedCover wc;
  for (const auto& [key, val] : j.at("w").items()) {
    std::uint64_t y = 0;
    try {
      y = std::stoull(key);
    } catch (...) {
      raise(Errc::parse_error, "witness keys must be naturals");
    }
    wc.witness[y] = val.get<std::size_t>();
  }
  for (std::uint64_t y : points)
    if (!wc.witness.count(y))
      raise(Errc::parse_error, "point " + std::to_string(y) + " lacks a witness");
  if (points.size() != wc.witness.size())
    raise(Errc::parse_error, "Y and w disagree");
  return wc;
}

json cover_to_json(const WitnessedCover& wc) {
  json w = json::object();
  for (const auto& [y, e] : wc.witness) w[std::to_string(y)] = e;
  return json{{"Y", wc.points()}, {"w", w}};
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::parse_error, "malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hypercover

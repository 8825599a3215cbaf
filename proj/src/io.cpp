// Serialization between the in-memory structures and JSON / DOT / plain text.
#include "pnil/io.hpp"

#include <sstream>

namespace pnil::io {

namespace {

// Word-level simplification only: combine adjacent syllables of one
// generator, drop vanishing exponents.  No collection involved.
Word merge_word(const Word& w) {
  Word out;
  for (const auto& s : w) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

json word_json(const PcPresentation& pc, const Word& w) {
  json arr = json::array();
  for (const auto& s : w) arr.push_back(json::array({pc.name(s.gen), s.exp}));
  return arr;
}

std::string family_name(catalog::Family f) {
  switch (f) {
    case catalog::Family::abelian: return "abelian";
    case catalog::Family::family_a: return "A";
    case catalog::Family::family_b: return "B";
    case catalog::Family::family_e: return "E";
    case catalog::Family::rank_two: return "G";
  }
  return "?";
}

}  // namespace

json presentation_json(const PcPresentation& pc) {
  json j;
  j["p"] = pc.prime();
  json gens = json::array();
  for (int i = 0; i < pc.count(); ++i)
    gens.push_back({{"name", pc.name(i)},
                    {"order_exp", pc.generator(i).order_exp}});
  j["generators"] = gens;

  json pows = json::array();
  for (int i = 0; i < pc.count(); ++i) {
    if (pc.power_word(i).empty()) continue;
    pows.push_back({{"generator", pc.name(i)},
                    {"value", word_json(pc, pc.power_word(i))}});
  }
  j["power_relations"] = pows;

  json comms = json::array();
  for (int i = 0; i < pc.count(); ++i)
    for (int g = i + 1; g < pc.count(); ++g) {
      if (pc.conj_trivial(i, g)) continue;
      // Stored: g_g^{g_i} = g_g [g_g, g_i], so the commutator word is the
      // conjugate word with one leading g_g removed.
      Word comm{{g, -1}};
      const Word& cw = pc.conj_word(i, g);
      comm.insert(comm.end(), cw.begin(), cw.end());
      comms.push_back({{"left", pc.name(g)},
                       {"right", pc.name(i)},
                       {"value", word_json(pc, merge_word(comm))}});
    }
  j["commutator_relations"] = comms;
  return j;
}

PcPresentation presentation_from_json(const json& j) {
  const i64 p = j.at("p").get<i64>();
  std::vector<PcGenerator> gens;
  std::map<std::string, int> index;
  for (const auto& g : j.at("generators")) {
    PcGenerator pg{g.at("name").get<std::string>(), g.at("order_exp").get<int>()};
    if (index.count(pg.name)) throw Error("duplicate generator name " + pg.name);
    index[pg.name] = static_cast<int>(gens.size());
    gens.push_back(pg);
  }
  auto gen_index = [&](const json& name) {
    auto it = index.find(name.get<std::string>());
    if (it == index.end())
      throw Error("unknown generator " + name.get<std::string>());
    return it->second;
  };
  auto parse_word = [&](const json& arr) {
    Word w;
    for (const auto& s : arr) w.push_back({gen_index(s.at(0)), s.at(1).get<i64>()});
    return w;
  };

  std::vector<Word> powers(gens.size());
  if (j.contains("power_relations"))
    for (const auto& r : j.at("power_relations"))
      powers[gen_index(r.at("generator"))] = parse_word(r.at("value"));

  std::map<std::pair<int, int>, Word> conj;
  if (j.contains("commutator_relations"))
    for (const auto& r : j.at("commutator_relations")) {
      const int left = gen_index(r.at("left"));
      const int right = gen_index(r.at("right"));
      if (right >= left)
        throw Error("commutator relation must have the later generator on the left");
      Word w{{left, 1}};
      const Word v = parse_word(r.at("value"));
      w.insert(w.end(), v.begin(), v.end());
      conj[{right, left}] = merge_word(w);
    }
  return PcPresentation(p, gens, powers, conj);
}

json params_json(const rank2::Params& P) {
  json j;
  j["label"] = P.label();
  j["variant"] = P.variant == rank2::Variant::type_one ? 1 : 2;
  j["n"] = P.n;
  j["m"] = P.m;
  if (P.variant == rank2::Variant::type_two) j["l"] = P.l;
  j["r"] = P.r;
  j["order_exp"] = P.order_exp();
  return j;
}

json count_json(const rank2::CountBreakdown& c) {
  json j;
  j["x"] = c.x;
  j["abelian"] = c.abelian;
  j["type_one"] = c.type_one;
  j["type_two"] = c.type_two;
  j["total"] = c.total;
  return j;
}

json descriptor_json(const ancestry::GroupDescriptor& d) {
  json j;
  j["label"] = d.label();
  if (d.kind == ancestry::Kind::abelian) {
    j["kind"] = "abelian";
    j["n1"] = d.n1;
    j["n2"] = d.n2;
  } else {
    j["kind"] = "rank2";
    j["params"] = params_json(d.params);
  }
  return j;
}

json fingerprint_json(const catalog::Fingerprint& f) {
  json j;
  j["order_exp"] = f.order_exp;
  j["abelianization"] = f.abelianization;
  j["exponent_exp"] = f.exponent_exp;
  j["center_exp"] = f.center_exp;
  j["center_pow_exp"] = f.center_pow_exp;
  j["derived_exp"] = f.derived_exp;
  j["agemo_exps"] = f.agemo_exps;
  j["omega_exps"] = f.omega_exps;
  j["order_histogram"] = f.order_histogram;
  j["pn_class"] = f.pn_class;
  j["pn_coclass"] = f.pn_coclass;
  j["type_sig"] = f.type_sig;
  return j;
}

json entry_json(const catalog::CatalogEntry& e, bool with_presentation,
                bool with_properties) {
  json j;
  j["label"] = e.label;
  j["family"] = family_name(e.family);
  j["p"] = e.p;
  j["order_exp"] = e.order_exp;
  j["type_invariants"] = e.type_invariants;
  if (with_presentation || with_properties) {
    const PcGroup g = e.build();
    if (with_presentation) j["presentation"] = presentation_json(g.presentation());
    if (with_properties) j["fingerprint"] = fingerprint_json(catalog::fingerprint(g));
  }
  return j;
}

std::string ancestors_dot(const ancestry::GroupDescriptor& target,
                          const std::vector<rank2::Params>& ancestors) {
  std::ostringstream out;
  out << "digraph ancestry {\n  rankdir=BT;\n";
  out << "  \"" << target.label() << "\";\n";
  for (const auto& P : ancestors)
    out << "  \"" << P.label() << "\" -> \"" << target.label() << "\";\n";
  out << "}\n";
  return out.str();
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < row.size() ? row[c] : "";
      out << cell << std::string(width[c] - cell.size(), ' ');
      out << (c + 1 < width.size() ? "  " : "");
    }
    out << "\n";
  };
  emit(header);
  size_t total = 0;
  for (size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
  out << std::string(total, '-') << "\n";
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace pnil::io

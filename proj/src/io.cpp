#include "rcalab/io.hpp"

#include <fstream>
#include <sstream>

#include "rcalab/error.hpp"

namespace rcalab::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError(name, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(name, "missing field");
  return *it;
}

long long integer(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(name, "expected an integer");
  return v.get<long long>();
}

std::string text(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw ParseError(name, "expected a string");
  return v.get<std::string>();
}

Word parse_word_field(const std::string& s, const char* name) {
  try {
    return Word::parse(s);
  } catch (const Error& e) {
    throw ParseError(name, e.what());
  }
}

OffsetConvention convention_from_string(const std::string& s) {
  if (s == to_string(OffsetConvention::OccurrenceAtOffset)) return OffsetConvention::OccurrenceAtOffset;
  if (s == to_string(OffsetConvention::WindowAtOffset)) return OffsetConvention::WindowAtOffset;
  throw ParseError("convention", "unknown offset convention '" + s + "'");
}

}  // namespace

Json to_json(const Perm& p) { return Json{{"width", p.width()}, {"map", p.table()}}; }

Perm load_perm(const Json& j) {
  const long long width = integer(j, "width");
  if (width < 0 || width > 20) throw ParseError("width", "out of range");
  const Json& map = field(j, "map");
  if (!map.is_array()) throw ParseError("map", "expected an array");
  const std::size_t degree = std::size_t{1} << width;
  if (map.size() != degree) {
    throw ParseError("map", "expected " + std::to_string(degree) + " entries, found " + std::to_string(map.size()));
  }
  std::vector<Point> table;
  std::vector<bool> seen(degree, false);
  for (std::size_t k = 0; k < degree; ++k) {
    const Json& v = map[k];
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= degree) {
      throw ParseError("map[" + std::to_string(k) + "]", "entry outside 0.." + std::to_string(degree - 1));
    }
    const Point x = v.get<Point>();
    if (seen[x]) throw ParseError("map[" + std::to_string(k) + "]", "bijection violated: image repeated");
    seen[x] = true;
    table.push_back(x);
  }
  return Perm(std::move(table));
}

Json to_json(const BlockMap& f) {
  return Json{{"alphabet", f.alphabet().tracks()},
              {"memory", f.memory()},
              {"anticipation", f.anticipation()},
              {"rule", f.rule()}};
}

BlockMap load_block_map(const Json& j) {
  const Json& a = field(j, "alphabet");
  if (!a.is_array()) throw ParseError("alphabet", "expected an array of track sizes");
  std::vector<int> tracks;
  for (const auto& t : a) {
    if (!t.is_number_integer()) throw ParseError("alphabet", "track sizes must be integers");
    tracks.push_back(t.get<int>());
  }
  const Json& rule = field(j, "rule");
  if (!rule.is_array()) throw ParseError("rule", "expected an array");
  std::vector<std::uint8_t> table;
  table.reserve(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    if (!rule[k].is_number_unsigned() || rule[k].get<std::uint64_t>() > 255) {
      throw ParseError("rule[" + std::to_string(k) + "]", "expected a symbol code");
    }
    table.push_back(rule[k].get<std::uint8_t>());
  }
  try {
    return BlockMap(Alphabet(tracks), static_cast<int>(integer(j, "memory")),
                    static_cast<int>(integer(j, "anticipation")), std::move(table));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("rule", e.what());
  }
}

Json to_json(const CtrlDescriptor& d) {
  return Json{{"control", d.control.to_string()},
              {"offset", d.offset},
              {"width", d.width()},
              {"perm", to_json(d.perm)},
              {"convention", to_string(d.convention)}};
}

CtrlDescriptor load_descriptor(const Json& j) {
  Word control = parse_word_field(text(j, "control"), "control");
  const long long offset = integer(j, "offset");
  Perm perm = load_perm(field(j, "perm"));
  if (j.contains("width") && integer(j, "width") != perm.width()) {
    throw ParseError("width", "does not match the perm width");
  }
  const auto convention =
      j.contains("convention") ? convention_from_string(text(j, "convention")) : OffsetConvention::OccurrenceAtOffset;
  try {
    return make_descriptor(std::move(perm), std::move(control), static_cast<int>(offset), convention);
  } catch (const OverlappingWindows& e) {
    throw ParseError("control", e.what());
  }
}

Json to_json(const MutuallyUnborderedFamily& family) {
  Json out = Json::array();
  for (const auto& w : family.words()) out.push_back(w.to_string());
  return out;
}

MutuallyUnborderedFamily load_family(const Json& j) {
  if (!j.is_array()) throw ParseError("family", "expected an array of words");
  std::vector<Word> words;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("family", "expected word strings");
    words.push_back(parse_word_field(v.get<std::string>(), "family"));
  }
  try {
    return MutuallyUnborderedFamily(std::move(words));
  } catch (const Error& e) {
    throw ParseError("family", e.what());
  }
}

Json to_json(const GateSequence& sequence) {
  Json out = Json::array();
  for (const auto& step : sequence) out.push_back(Json{{"gate", step.gate}, {"offset", step.offset}});
  return out;
}

GateSequence load_gate_sequence(const Json& j) {
  if (!j.is_array()) throw ParseError("gates", "expected an array");
  GateSequence out;
  for (const auto& step : j) out.push_back({text(step, "gate"), static_cast<int>(integer(step, "offset"))});
  return out;
}

Json to_json(const GenWordCert& cert) {
  Json word = Json::array();
  for (Generator g : cert.word) word.push_back(token(g));
  Json stages = Json::array();
  for (const auto& s : cert.stages) stages.push_back(Json{{"name", s.name}, {"verified", s.verified}, {"detail", s.detail}});
  return Json{{"word", std::move(word)},
              {"target", to_json(cert.target)},
              {"verified", cert.verified},
              {"policy", cert.policy},
              {"stages", std::move(stages)}};
}

GenWordCert load_certificate(const Json& j) {
  const Json& word = field(j, "word");
  if (!word.is_array()) throw ParseError("word", "expected an array of tokens");
  GeneratorWord tokens;
  for (const auto& t : word) {
    if (!t.is_string()) throw ParseError("word", "tokens must be strings");
    try {
      tokens.push_back(generator_from_token(t.get<std::string>()));
    } catch (const Error& e) {
      throw ParseError("word", e.what());
    }
  }
  GenWordCert out{std::move(tokens), load_descriptor(field(j, "target")), false, "", {}};
  const Json& verified = field(j, "verified");
  if (!verified.is_boolean()) throw ParseError("verified", "expected a boolean");
  out.verified = verified.get<bool>();
  out.policy = text(j, "policy");
  if (j.contains("stages")) {
    for (const auto& s : field(j, "stages")) {
      out.stages.push_back({text(s, "name"), field(s, "verified").get<bool>(), text(s, "detail")});
    }
  }
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace rcalab::io

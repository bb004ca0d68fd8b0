#include "squarefold/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "squarefold/rational.hpp"

namespace squarefold {

using nlohmann::json;

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw validation_error("bad rational: " + s);
  }
}

std::string gluing_to_jsonl(const Gluing& g) {
  json ids = json::array();
  for (const auto& id : g.identifications) {
    ids.push_back(json::array({id.first.square,
                               std::string(1, side_letter(id.first.side)),
                               id.second.square,
                               std::string(1, side_letter(id.second.side)),
                               id.flip}));
  }
  json j;
  j["n"] = g.n;
  j["id"] = std::move(ids);
  return j.dump();
}

Gluing gluing_from_jsonl(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("bad gluing json: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("id"))
    throw validation_error("gluing json missing n or id");
  std::vector<std::tuple<int, Side, int, Side, bool>> pairs;
  for (const auto& entry : j["id"]) {
    if (!entry.is_array() || entry.size() != 5)
      throw validation_error("gluing id entry must be [sq,side,sq,side,flip]");
    std::string a = entry[1].get<std::string>();
    std::string b = entry[3].get<std::string>();
    if (a.size() != 1 || b.size() != 1)
      throw validation_error("side must be a single letter");
    pairs.emplace_back(entry[0].get<int>(), side_from_letter(a[0]),
                       entry[2].get<int>(), side_from_letter(b[0]),
                       entry[4].get<bool>());
  }
  return Gluing::from_pairs(j["n"].get<int>(), pairs);
}

std::vector<Gluing> read_gluings(std::istream& in) {
  std::vector<Gluing> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(gluing_from_jsonl(line));
  }
  return out;
}

std::vector<Gluing> read_gluings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open " + path);
  return read_gluings(in);
}

void write_gluings_file(const std::string& path,
                        const std::vector<Gluing>& gluings) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open " + path + " for writing");
  for (const auto& g : gluings) out << gluing_to_jsonl(g) << '\n';
}

}  // namespace squarefold

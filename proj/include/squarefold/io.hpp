#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "squarefold/surface.hpp"

namespace squarefold {

// One gluing per line:
//   {"n": 2, "id": [[0,"N",1,"N",true], ...]}
// with identifications in normalized sorted order. This is the interchange
// format consumed by every pipeline stage.
std::string gluing_to_jsonl(const Gluing& g);
Gluing gluing_from_jsonl(const std::string& line);

std::vector<Gluing> read_gluings(std::istream& in);
std::vector<Gluing> read_gluings_file(const std::string& path);
void write_gluings_file(const std::string& path,
                        const std::vector<Gluing>& gluings);

}  // namespace squarefold

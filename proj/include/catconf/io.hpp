#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "catconf/catalecticant.hpp"
#include "catconf/monodromy.hpp"
#include "catconf/poly.hpp"
#include "catconf/systems.hpp"
#include "catconf/types.hpp"

namespace catconf {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im]; doubles round-trip exactly.
Json to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json to_json(const CVec& v);
CVec cvec_from_json(const Json& j);

// {"n": int, "degrees": [int...], "forms": [[[re,im]...]...]}
Json to_json(const PolyVector& f);
PolyVector polyvector_from_json(const Json& j);

// {"shape": [rows, cols], "rank": int, "sigma": [...], "gap": real,
//  "memberships": [...]}
Json to_json(const RankReport& rep);

// Solution-set payload written by the count command and consumed by verify:
// {"preset", "seed", "base_p", "classes": [{"summands", "residual",
//  "is_real"}], "loops_run", "stabilized", "path_failures"}
struct SolutionSet {
  std::string preset;
  std::uint64_t seed = 0;
  CVec base_point;
  struct Entry {
    std::vector<CVec> summands;
    double residual = 0.0;
    bool is_real = false;
  };
  std::vector<Entry> classes;
  int loops_run = 0;
  bool stabilized = false;
  int path_failures = 0;
};

SolutionSet make_solution_set(const std::string& preset, std::uint64_t seed,
                              const ParameterizedSystem& sys, const MonodromyState& state);
Json to_json(const SolutionSet& s);
SolutionSet solution_set_from_json(const Json& j);

// Concatenates summand blocks back into a solution vector.
CVec x_from_summands(const std::vector<CVec>& summands);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace catconf

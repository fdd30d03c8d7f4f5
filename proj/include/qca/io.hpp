#ifndef QCA_IO_HPP
#define QCA_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qca/seed.hpp"

namespace qca {

/**
 * Seed schema:
 *   {
 *     "vertices": ["1", "2", "3"],
 *     "frozen":   ["2", "3"],
 *     "B":        [[0], [1], [-1]],          // I rows, one column per unfrozen
 *     "Lambda":   [[0,0,1],[0,0,0],[-1,0,0]] // or "auto" to search for one
 *   }
 */
Seed load_seed_json(const nlohmann::json& j);
Seed load_seed_file(const std::string& path);
nlohmann::json seed_to_json(const Seed& t);

nlohmann::json qcoeff_to_json(const QCoeff& c);
nlohmann::json element_to_json(const TorusElement& a);

// Comma-separated vertex names -> vertex indices.
std::vector<int> parse_word(const Seed& t, const std::string& csv);

// Comma-separated integers, must have exactly n entries (any length when n
// is negative).
ExpVec parse_vec(const std::string& csv, int n = -1);

}  // namespace qca

#endif

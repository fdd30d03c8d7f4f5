#include "qca/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

long long to_ll(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw InputError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

IntMat load_matrix(const nlohmann::json& j, int rows, int cols,
                   const char* what) {
    if (!j.is_array() || (int)j.size() != rows)
        throw InputError(std::string(what) + " must have " +
                         std::to_string(rows) + " rows");
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || (int)row.size() != cols)
            throw InputError(std::string(what) + " row " + std::to_string(i) +
                             " must have " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) m.at(i, c) = to_ll(row[c], what);
    }
    return m;
}

}  // namespace

Seed load_seed_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("seed must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array() ||
        j["vertices"].empty())
        throw InputError("seed needs a nonempty \"vertices\" array");

    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (v.is_string())
            names.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            names.push_back(std::to_string(v.get<long long>()));
        else
            throw InputError("vertex names must be strings");
    }
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size())
        throw InputError("vertex names must be distinct");

    std::set<std::string> frozen;
    if (j.contains("frozen")) {
        if (!j["frozen"].is_array())
            throw InputError("\"frozen\" must be an array of vertex names");
        for (const auto& v : j["frozen"]) {
            if (!v.is_string() && !v.is_number_integer())
                throw InputError("frozen entries must be vertex names");
            std::string nm = v.is_string() ? v.get<std::string>()
                                           : std::to_string(v.get<long long>());
            if (!uniq.count(nm))
                throw InputError("unknown frozen vertex: " + nm);
            frozen.insert(nm);
        }
    }
    std::vector<int> unfrozen;
    for (int i = 0; i < (int)names.size(); ++i)
        if (!frozen.count(names[i])) unfrozen.push_back(i);
    if (unfrozen.empty()) throw InputError("all vertices are frozen");

    int n = (int)names.size();
    int nuf = (int)unfrozen.size();
    if (!j.contains("B")) throw InputError("seed needs a \"B\" matrix");
    IntMat b = load_matrix(j["B"], n, nuf, "B");

    IntMat lambda(n, n);
    if (!j.contains("Lambda") ||
        (j["Lambda"].is_string() && j["Lambda"] == "auto"))
        lambda = quantize(b, unfrozen);
    else
        lambda = load_matrix(j["Lambda"], n, n, "Lambda");

    return make_root_seed(std::move(names), std::move(unfrozen), std::move(b),
                          std::move(lambda));
}

Seed load_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open seed file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
    return load_seed_json(j);
}

nlohmann::json seed_to_json(const Seed& t) {
    nlohmann::json j;
    j["vertices"] = t.names;
    std::vector<std::string> frozen;
    for (int i = 0; i < t.nvert(); ++i)
        if (!t.is_unfrozen(i)) frozen.push_back(t.names[i]);
    j["frozen"] = frozen;
    std::vector<std::vector<long long>> b(t.nvert()), l(t.nvert());
    for (int i = 0; i < t.nvert(); ++i) {
        for (int c = 0; c < t.nuf(); ++c) b[i].push_back(t.b.at(i, c));
        for (int c = 0; c < t.nvert(); ++c) l[i].push_back(t.lambda.at(i, c));
    }
    j["B"] = b;
    j["Lambda"] = l;
    return j;
}

nlohmann::json qcoeff_to_json(const QCoeff& c) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, z] : c.terms()) {
        if (z.fits_slong_p())
            j[std::to_string(e)] = (long long)z.get_si();
        else
            j[std::to_string(e)] = z.get_str();
    }
    return j;
}

nlohmann::json element_to_json(const TorusElement& a) {
    nlohmann::json j;
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : a.terms()) {
        nlohmann::json t;
        t["exponent"] = m;
        t["coeff"] = qcoeff_to_json(c);
        j["terms"].push_back(t);
    }
    if (a.trunc())
        j["truncated_at"] = *a.trunc();
    else
        j["truncated_at"] = nullptr;
    return j;
}

std::vector<int> parse_word(const Seed& t, const std::string& csv) {
    std::vector<int> word;
    for (const std::string& nm : split_csv(csv)) {
        if (nm.empty()) throw InputError("empty vertex name in word");
        int v = t.vertex_by_name(nm);
        if (v < 0) throw InputError("unknown vertex in word: " + nm);
        word.push_back(v);
    }
    return word;
}

ExpVec parse_vec(const std::string& csv, int n) {
    std::vector<std::string> parts = split_csv(csv);
    if (n >= 0 && (int)parts.size() != n)
        throw InputError("expected " + std::to_string(n) +
                         " comma-separated integers");
    ExpVec v;
    for (const std::string& p : parts) {
        try {
            size_t pos = 0;
            long long x = std::stoll(p, &pos);
            if (pos != p.size()) throw std::invalid_argument(p);
            v.push_back(x);
        } catch (const std::exception&) {
            throw InputError("not an integer: " + p);
        }
    }
    return v;
}

}  // namespace qca

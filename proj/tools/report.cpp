#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace matlin::cli {

namespace {

Rat rat_from_json(const Json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw InputError("matrix entries must be integers or \"p/q\" strings");
}

// One signed term: coefficient c times a monomial already rendered in
// `body` ("" for the constant monomial).
void append_term(std::string& out, std::int64_t c, const std::string& body) {
    if (c == 0) return;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (body.empty())
        out += std::to_string(mag);
    else
        out += (mag == 1 ? "" : std::to_string(mag)) + body;
}

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    return e == 1 ? var : var + "^" + std::to_string(e);
}

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
        if (x.is_object() || (x.is_array() && !std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })))
            return false;
    return true;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string inline_text(const Json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string out = "[";
    bool first = true;
    for (const auto& x : v) {
        if (!first) out += ", ";
        first = false;
        out += inline_text(x);
    }
    return out + "]";
}

bool is_flat_object(const Json& v) {
    if (!v.is_object()) return false;
    for (const auto& [k, x] : v.items())
        if (!x.is_primitive() && !is_flat_array(x)) return false;
    return true;
}

std::string inline_object(const Json& v) {
    std::string out;
    for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : ", ") + k + ": " + inline_text(x);
    return out;
}

void render(const Json& v, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_primitive() || is_flat_array(x)) {
                os << pad << k << ": " << inline_text(x) << "\n";
            } else {
                os << pad << k << ":\n";
                render(x, indent + 2, os);
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_primitive() || is_flat_array(x)) {
                os << pad << "- " << inline_text(x) << "\n";
            } else if (is_flat_object(x)) {
                os << pad << "- " << inline_object(x) << "\n";
            } else {
                os << pad << "-\n";
                render(x, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar_text(v) << "\n";
    }
}

}  // namespace

Matroid Input::matroid() const {
    if (matrix) {
        if (matrix->cols() == 0) throw EmptyGroundSet("matrix has no columns");
        if (matrix->cols() > static_cast<std::size_t>(Matroid::max_label))
            throw InputError("at most " + std::to_string(Matroid::max_label) + " columns are supported");
        return Matroid::from_matrix(*matrix);
    }
    if (n <= 0) throw EmptyGroundSet("ground set is empty");
    return Matroid::from_bases(ElementSet::range(1, n), bases);
}

Json Input::canonical() const {
    Json j;
    if (matrix) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < matrix->rows(); ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < matrix->cols(); ++c) row.push_back(to_string((*matrix)(i, c)));
            rows.push_back(row);
        }
        j["matrix"] = rows;
        if (!b.empty()) {
            Json bj = Json::array();
            for (const auto& x : b) bj.push_back(to_string(x));
            j["b"] = bj;
        }
    } else {
        j["n"] = n;
        std::vector<ElementSet> sorted = bases;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        j["bases"] = to_json(sorted);
    }
    return j;
}

Input parse_matrix_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
        throw InputError("expected an object with a \"matrix\" array");
    const Json& rows = j["matrix"];
    if (rows.empty()) throw InputError("matrix has no rows");
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols) throw InputError("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(rows[i][c]);
    }
    Input in;
    in.matrix = std::move(m);
    if (j.contains("b")) {
        if (!j["b"].is_array()) throw InputError("\"b\" must be an array");
        for (const auto& x : j["b"]) in.b.push_back(rat_from_json(x));
        if (in.b.size() != rows.size()) throw InputError("\"b\" needs one entry per matrix row");
    }
    return in;
}

Input parse_bases_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("bases") ||
        !j["bases"].is_array())
        throw InputError("expected an object with integer \"n\" and a \"bases\" array");
    Input in;
    in.n = j["n"].get<int>();
    if (in.n > Matroid::max_label)
        throw InputError("at most " + std::to_string(Matroid::max_label) + " elements are supported");
    for (const auto& b : j["bases"]) {
        if (!b.is_array()) throw InputError("each basis must be an array of elements");
        ElementSet s;
        for (const auto& e : b) {
            if (!e.is_number_integer()) throw InputError("basis elements must be integers");
            const int x = e.get<int>();
            if (x < 1 || x > in.n) throw InputError("basis element " + std::to_string(x) + " is outside 1..n");
            s = s.with(x);
        }
        in.bases.push_back(s);
    }
    return in;
}

std::vector<Rat> parse_rat_csv(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        try {
            out.push_back(parse_rat(item));
        } catch (const std::invalid_argument& e) {
            throw InputError("bad rational '" + item + "': " + e.what());
        }
    }
    return out;
}

std::vector<int> parse_int_csv(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad element '" + item + "' in order");
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(ElementSet s) {
    Json a = Json::array();
    for (int e : s) a.push_back(e);
    return a;
}

Json to_json(const std::vector<ElementSet>& sets) {
    Json a = Json::array();
    for (ElementSet s : sets) a.push_back(to_json(s));
    return a;
}

Json variables_json(ElementSet monomial) {
    Json a = Json::array();
    for (int v : monomial) a.push_back(variable_name(v));
    return a;
}

Json ideal_json(const SquarefreeMonomialIdeal& ideal) {
    Json gens = Json::array();
    for (ElementSet g : ideal.generators()) gens.push_back(variables_json(g));
    return {{"generators", gens}, {"display", ideal.to_string()}};
}

Json components_json(const std::vector<ElementSet>& components) {
    Json a = Json::array();
    for (ElementSet c : components) a.push_back(variables_json(c));
    return a;
}

Json order_json(const LinearOrder& order) { return order.sequence(); }

Json poly_json(const UniPoly& p) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) terms.push_back({{"x", i}, {"c", p[i]}});
    return {{"terms", terms}, {"display", display_uni(p)}};
}

Json poly_json(const BivarPoly& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({{"x", k.first}, {"y", k.second}, {"c", c}});
    return {{"terms", terms}, {"display", display_bivar(p)}};
}

Json poly_json(const TrivarPoly& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({{"x", k[0]}, {"y", k[1]}, {"z", k[2]}, {"c", c}});
    return {{"terms", terms}, {"display", display_trivar(p)}};
}

Json poly_json(const HomogPolynomial& p, ElementSet ground) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json xs = Json::array(), ys = Json::array();
        for (int e : ground) {
            xs.push_back(it->first.exp[static_cast<std::size_t>(xvar(e))]);
            ys.push_back(it->first.exp[static_cast<std::size_t>(yvar(e))]);
        }
        terms.push_back({{"x", xs}, {"y", ys}, {"c", to_string(it->second)}});
    }
    return {{"terms", terms}, {"display", p.to_string()}};
}

Json betti_json(const BettiTable& t, bool coarse) {
    Json entries = Json::array();
    for (const auto& [k, beta] : t.entries())
        entries.push_back({{"i", k.first}, {"degree", coarse ? to_json(k.second) : variables_json(k.second)}, {"beta", beta}});
    return {{"entries", entries}};
}

Json polytope_json(const GenPermutahedron& p) {
    Json z = Json::array();
    for (const auto& [s, v] : p.z) z.push_back({{"S", to_json(s)}, {"val", to_string(v)}});
    Json verts = Json::array();
    for (const auto& v : p.vertices) {
        Json pt = Json::array();
        for (const auto& x : v) pt.push_back(to_string(x));
        verts.push_back(pt);
    }
    return {{"n", p.ground.size()}, {"z", z}, {"vertices", verts}};
}

std::string display_uni(const UniPoly& p, const std::string& var) {
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) append_term(out, p[i], power(var, static_cast<int>(i)));
    return out.empty() ? "0" : out;
}

std::string display_bivar(const BivarPoly& p, const std::string& x, const std::string& y) {
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        append_term(out, it->second, power(x, it->first.first) + power(y, it->first.second));
    return out.empty() ? "0" : out;
}

std::string display_trivar(const TrivarPoly& p) {
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        append_term(out, it->second, power("x", it->first[0]) + power("y", it->first[1]) + power("z", it->first[2]));
    return out.empty() ? "0" : out;
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    render(report, 0, os);
    return os.str();
}

}  // namespace matlin::cli

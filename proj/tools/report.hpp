#ifndef MATLIN_TOOLS_REPORT_HPP
#define MATLIN_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "matlin/affine.hpp"
#include "matlin/ideal.hpp"
#include "matlin/polytope.hpp"

namespace matlin::cli {

using Json = nlohmann::ordered_json;

/// Parsed input: a matrix (optionally with a right-hand side) or an
/// explicit basis list on 1..n.
struct Input {
    std::optional<RatMatrix> matrix;
    std::vector<Rat> b;
    int n = 0;
    std::vector<ElementSet> bases;

    Matroid matroid() const;
    /// Canonical JSON used for the provenance hash.
    Json canonical() const;
};

/// Thrown for malformed files, flags or orders.
class InputError : public MatlinError {
public:
    explicit InputError(const std::string& what) : MatlinError("InputError", what) {}
};

Input parse_matrix_json(const Json& j);
Input parse_bases_json(const Json& j);
std::vector<Rat> parse_rat_csv(const std::string& csv);
std::vector<int> parse_int_csv(const std::string& csv);

std::string sha256_hex(const std::string& data);

Json to_json(const Rat& r);
Json to_json(ElementSet s);
Json to_json(const std::vector<ElementSet>& sets);
/// Variable names of a monomial, e.g. ["x1", "y2"].
Json variables_json(ElementSet monomial);
Json ideal_json(const SquarefreeMonomialIdeal& ideal);
Json components_json(const std::vector<ElementSet>& components);
Json order_json(const LinearOrder& order);
Json poly_json(const UniPoly& p);
Json poly_json(const BivarPoly& p);
Json poly_json(const TrivarPoly& p);
/// Exponents listed over the labels of `ground`.
Json poly_json(const HomogPolynomial& p, ElementSet ground);
/// Degrees as element lists when `coarse`, variable names otherwise.
Json betti_json(const BettiTable& t, bool coarse);
Json polytope_json(const GenPermutahedron& p);

std::string display_uni(const UniPoly& p, const std::string& var = "x");
std::string display_bivar(const BivarPoly& p, const std::string& x = "x", const std::string& y = "y");
std::string display_trivar(const TrivarPoly& p);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace matlin::cli

#endif

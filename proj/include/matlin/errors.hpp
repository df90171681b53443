#ifndef MATLIN_ERRORS_HPP
#define MATLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "matlin/element_set.hpp"

namespace matlin {

/// Base of every domain error the library throws. `kind()` is a stable
/// machine-readable tag used by the CLI error object.
class MatlinError : public std::runtime_error {
public:
    MatlinError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// An explicit basis list breaks the basis axioms. For exchange failures
/// (first, second, element) is a witness: removing `element` from `first`
/// cannot be repaired from `second`. For a cardinality mismatch `element`
/// is -1.
class AxiomViolation : public MatlinError {
public:
    AxiomViolation(const std::string& what, ElementSet first, ElementSet second, int element)
        : MatlinError("AxiomViolation", what), first(first), second(second), element(element) {}
    ElementSet first, second;
    int element;
};

#define MATLIN_SIMPLE_ERROR(Name)                                              \
    class Name : public MatlinError {                                          \
    public:                                                                    \
        explicit Name(const std::string& what) : MatlinError(#Name, what) {}   \
    }

MATLIN_SIMPLE_ERROR(EmptyGroundSet);
MATLIN_SIMPLE_ERROR(NotABasis);
MATLIN_SIMPLE_ERROR(ElementMembership);
MATLIN_SIMPLE_ERROR(EmptyPolytope);
MATLIN_SIMPLE_ERROR(ZeroPolynomial);
MATLIN_SIMPLE_ERROR(RankDeficient);
MATLIN_SIMPLE_ERROR(NotEquidimensional);
MATLIN_SIMPLE_ERROR(CutoffExceeded);
MATLIN_SIMPLE_ERROR(InconsistentSystem);
MATLIN_SIMPLE_ERROR(NotAMorphism);

#undef MATLIN_SIMPLE_ERROR

}  // namespace matlin

#endif

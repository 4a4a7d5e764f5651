#ifndef DLTZETA_ERROR_HPP
#define DLTZETA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dltz {

enum class Errc {
    zero_denominator,
    not_expandable,
    atom_product,
    degenerate_cone,
    cannot_decrease,
    not_primitive,
    outside_support,
    cone_not_in_fan,
    schema_error,
    empty_polynomial,
    constant_term_present,
    negative_coordinate,
    negative_dimension,
    dimension_too_high,
    singular_system,
    not_log_canonical,
    not_an_lc_center,
    not_klt,
    not_regular,
    invalid_argument,
};

inline std::string_view errc_name(Errc c)
{
    switch (c) {
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::not_expandable: return "NotExpandable";
    case Errc::atom_product: return "AtomProduct";
    case Errc::degenerate_cone: return "DegenerateCone";
    case Errc::cannot_decrease: return "CannotDecrease";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::outside_support: return "OutsideSupport";
    case Errc::cone_not_in_fan: return "ConeNotInFan";
    case Errc::schema_error: return "SchemaError";
    case Errc::empty_polynomial: return "EmptyPolynomial";
    case Errc::constant_term_present: return "ConstantTermPresent";
    case Errc::negative_coordinate: return "NegativeCoordinate";
    case Errc::negative_dimension: return "NegativeDimension";
    case Errc::dimension_too_high: return "DimensionTooHigh";
    case Errc::singular_system: return "SingularSystem";
    case Errc::not_log_canonical: return "NotLogCanonical";
    case Errc::not_an_lc_center: return "NotAnLcCenter";
    case Errc::not_klt: return "NotKlt";
    case Errc::not_regular: return "NotRegular";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace dltz

#endif

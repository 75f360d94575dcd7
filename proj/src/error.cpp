#include "hivebr/error.hpp"

namespace hivebr {

const char* to_string(errc c) noexcept {
    switch (c) {
        case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
        case errc::negative_part: return "NegativePart";
        case errc::length_exceeded: return "LengthExceeded";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::row_not_weakly_increasing: return "RowNotWeaklyIncreasing";
        case errc::column_not_strictly_increasing: return "ColumnNotStrictlyIncreasing";
        case errc::not_littlewood_richardson: return "NotLittlewoodRichardson";
        case errc::not_dominant: return "NotDominant";
        case errc::invalid_content: return "InvalidContent";
        case errc::alphabet_exceeded: return "AlphabetExceeded";
        case errc::shape_too_long: return "ShapeTooLong";
        case errc::shape_not_contained: return "ShapeNotContained";
        case errc::invalid_gt: return "InvalidGT";
        case errc::instance_invalid: return "InstanceInvalid";
        case errc::not_in_domain: return "NotInDomain";
        case errc::unknown_kind: return "UnknownKind";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace hivebr

#include "nonarch/order.hpp"

namespace nonarch {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Zero: return "Zero";
        case Classification::NonzeroInfinitesimal: return "NonzeroInfinitesimal";
        case Classification::FiniteAppreciable: return "FiniteAppreciable";
        case Classification::InfinitelyLarge: return "InfinitelyLarge";
    }
    return "?";
}

const char* field_name(FieldId id) {
    switch (id) {
        case FieldId::Q: return "q";
        case FieldId::RatFuncField: return "ratfunc";
        case FieldId::Laurent: return "laurent";
        case FieldId::Puiseux: return "puiseux";
        case FieldId::LeviCivita: return "levicivita";
    }
    return "?";
}

} // namespace nonarch

#pragma once

#include <stdexcept>
#include <string>

namespace mvp {

/// Base class for every contract violation raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MVP_DEFINE_ERROR(Name)                      \
    class Name : public error {                     \
    public:                                         \
        explicit Name(const std::string& what_arg)  \
            : error(what_arg) {}                    \
    }

MVP_DEFINE_ERROR(ParseError);
MVP_DEFINE_ERROR(InvalidSize);
MVP_DEFINE_ERROR(IndexOutOfRange);
MVP_DEFINE_ERROR(InvalidPermutation);
MVP_DEFINE_ERROR(InvalidPreference);
MVP_DEFINE_ERROR(NotAParkingFunction);
MVP_DEFINE_ERROR(PatternLongerThanHost);
MVP_DEFINE_ERROR(NotASubgraphOf);
MVP_DEFINE_ERROR(SizeCapExceeded);
MVP_DEFINE_ERROR(NotAMotzkinParkingFunction);
MVP_DEFINE_ERROR(NotAMotzkinPath);
MVP_DEFINE_ERROR(NotAValidDecSubgraph);
MVP_DEFINE_ERROR(VertexStable);
MVP_DEFINE_ERROR(NotStable);
MVP_DEFINE_ERROR(NotMinimalRecurrent);
MVP_DEFINE_ERROR(NotRecurrent);
MVP_DEFINE_ERROR(NegativeEntry);

#undef MVP_DEFINE_ERROR

}  // namespace mvp

#pragma once

#include <stdexcept>
#include <string>

namespace qgp {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& msg) : Error(msg) {}
};
struct MalformedRelation : Error {
    explicit MalformedRelation(const std::string& msg) : Error(msg) {}
};
struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& msg) : Error(msg) {}
};
struct ZeroModule : Error {
    explicit ZeroModule(const std::string& msg) : Error(msg) {}
};
struct ZeroGenerator : Error {
    explicit ZeroGenerator(const std::string& msg) : Error(msg) {}
};
struct NotMonomial : Error {
    explicit NotMonomial(const std::string& msg) : Error(msg) {}
};
struct NotPerfect : Error {
    explicit NotPerfect(const std::string& msg) : Error(msg) {}
};
struct HypothesisFails : Error {
    explicit HypothesisFails(const std::string& msg) : Error(msg) {}
};
struct InvalidLift : Error {
    explicit InvalidLift(const std::string& msg) : Error(msg) {}
};
struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& msg) : Error(msg) {}
};
struct PrerequisiteFails : Error {
    explicit PrerequisiteFails(const std::string& msg) : Error(msg) {}
};

}  // namespace qgp

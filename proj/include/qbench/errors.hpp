#pragma once

#include <stdexcept>
#include <string>

namespace qbench {

// Error taxonomy shared by every module. Callers catch the base class when
// the category does not matter.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

template <class E = InvalidArgument>
inline void require(bool cond, const std::string& what) {
    if (!cond) throw E(what);
}

} // namespace qbench
